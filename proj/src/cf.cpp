#include "ebcf/cf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace ebcf {

const char* kind_name(CfKind k) {
  switch (k) {
    case CfKind::ecf: return "ecf";
    case CfKind::bcf: return "bcf";
    case CfKind::rcf: return "rcf";
  }
  return "?";
}

CfKind parse_kind(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "ecf" || t == "e") return CfKind::ecf;
  if (t == "bcf" || t == "b") return CfKind::bcf;
  if (t == "rcf" || t == "r") return CfKind::rcf;
  fail(Errc::parse_error, "unknown kind: " + s);
}

static void validate_digit(const Digit& d, CfKind k) {
  switch (k) {
    case CfKind::ecf:
      if (d.a < 2 || mpz_odd_p(d.a.get_mpz_t()) || (d.e != 1 && d.e != -1))
        fail(Errc::out_of_domain, "ecf digit needs even a >= 2 and e = +-1");
      return;
    case CfKind::bcf:
      if (d.a < 2 || d.e != -1) fail(Errc::out_of_domain, "bcf digit needs a >= 2 and e = -1");
      return;
    case CfKind::rcf:
      if (d.a < 1 || d.e != 1) fail(Errc::out_of_domain, "rcf digit needs a >= 1 and e = +1");
      return;
  }
}

void validate_word(const CfWord& w) {
  for (const Digit& d : w.digits) validate_digit(d, w.kind);
}

CfWord ecf_word(std::vector<std::pair<long, int>> digits) {
  CfWord w{CfKind::ecf, {}};
  for (auto [a, e] : digits) w.digits.push_back({Int(a), e});
  validate_word(w);
  return w;
}

CfWord bcf_word(std::vector<long> digits) {
  CfWord w{CfKind::bcf, {}};
  for (long a : digits) w.digits.push_back({Int(a), -1});
  validate_word(w);
  return w;
}

CfWord rcf_word(std::vector<long> digits) {
  CfWord w{CfKind::rcf, {}};
  for (long a : digits) w.digits.push_back({Int(a), +1});
  validate_word(w);
  return w;
}

Mat2Z digit_matrix(const Digit& d) { return {d.a, Int(d.e), Int(1), Int(0)}; }

Digit first_digit(const QuadraticIrrational& u, CfKind k) {
  Int n = u.floor();
  if (n < 1) fail(Errc::out_of_domain, "shift domain is (1,oo): got floor < 1");
  switch (k) {
    case CfKind::ecf: {
      // a = 2*floor((u+1)/2): the even integer nearest to u; e = sgn(u - a)
      bool odd = mpz_odd_p(n.get_mpz_t());
      return odd ? Digit{n + 1, -1} : Digit{n, +1};
    }
    case CfKind::bcf:
      return {n + 1, -1};
    case CfKind::rcf:
      return {n, +1};
  }
  fail(Errc::out_of_domain, "bad kind");
}

QuadraticIrrational shift(const QuadraticIrrational& u, CfKind k) {
  Digit d = first_digit(u, k);
  return u.apply_mobius(digit_matrix(d).inverse_unimodular());
}

Expansion expand(const QuadraticIrrational& u, CfKind k, std::size_t max_steps) {
  std::unordered_map<QuadraticIrrational, std::size_t, QiHash> seen;
  std::vector<Digit> digits;
  QuadraticIrrational v = u;
  for (std::size_t i = 0; i < max_steps; ++i) {
    auto [it, fresh] = seen.emplace(v, i);
    if (!fresh) {
      std::size_t r = it->second;
      Expansion ex{{k, {digits.begin(), digits.begin() + static_cast<long>(r)}},
                   {k, {digits.begin() + static_cast<long>(r), digits.end()}}};
      return ex;
    }
    Digit d = first_digit(v, k);
    digits.push_back(d);
    v = v.apply_mobius(digit_matrix(d).inverse_unimodular());
  }
  fail(Errc::unrepresentable, "expansion did not close within step budget");
}

std::vector<ConvergentPair> convergents(const CfWord& w) {
  validate_word(w);
  std::vector<ConvergentPair> out;
  out.reserve(w.size() + 1);
  out.push_back({Int(1), Int(0)});
  Int pm1 = 1, qm1 = 0;  // p_{k-1}, q_{k-1}
  Int p = 0, q = 0;
  int e_prev = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Digit& d = w.digits[i];
    if (i == 0) {
      p = d.a;
      q = 1;
    } else {
      Int pn = d.a * p + e_prev * pm1;
      Int qn = d.a * q + e_prev * qm1;
      pm1 = std::exchange(p, std::move(pn));
      qm1 = std::exchange(q, std::move(qn));
    }
    e_prev = d.e;
    out.push_back({p, q});
  }
  return out;
}

Mat2Z word_to_matrix(const CfWord& w) {
  validate_word(w);
  Mat2Z m = Mat2Z::identity();
  for (const Digit& d : w.digits) m = m * digit_matrix(d);
  return m;
}

int word_det_sign(const CfWord& w) {
  int s = 1;
  for (const Digit& d : w.digits) s *= -d.e;
  return s;
}

bool is_primitive(const CfWord& w) {
  std::size_t n = w.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool rep = true;
    for (std::size_t i = d; i < n && rep; ++i) rep = w.digits[i] == w.digits[i - d];
    if (rep) return false;
  }
  return true;
}

CfWord primitive_block(const CfWord& w) {
  std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool rep = true;
    for (std::size_t i = d; i < n && rep; ++i) rep = w.digits[i] == w.digits[i - d];
    if (rep) return {w.kind, {w.digits.begin(), w.digits.begin() + static_cast<long>(d)}};
  }
  return w;
}

bool is_degenerate_period(const CfWord& w) {
  if (w.empty()) return true;
  if (w.kind == CfKind::rcf) return false;
  return std::all_of(w.digits.begin(), w.digits.end(),
                     [](const Digit& d) { return d.a == 2 && d.e == -1; });
}

QuadraticIrrational word_value(const CfWord& w) {
  validate_word(w);
  if (w.empty()) fail(Errc::out_of_domain, "empty period word");
  if (is_degenerate_period(w)) fail(Errc::degenerate_period, "parabolic period word");
  Mat2Z m = word_to_matrix(w);
  // fixed point of [[a,b],[c,d]]: c x^2 + (d-a) x - b = 0, larger root
  QuadraticIrrational v(m.c, m.d - m.a, -m.b, RootSign::plus);
  if (v.compare(Rat(1)) < 0) fail(Errc::degenerate_period, "period value not above 1");
  return v;
}

PeriodInfo period_info(const CfWord& w) {
  validate_word(w);
  if (w.empty()) fail(Errc::out_of_domain, "empty period word");
  int delta = word_det_sign(w);
  return {w.size(), delta, delta == 1 ? w.size() : 2 * w.size()};
}

Mat2Z omega_matrix(const CfWord& w) { return word_to_matrix(w); }

Mat2Z omega_tilde(const CfWord& w) {
  Mat2Z m = word_to_matrix(w);
  return word_det_sign(w) == 1 ? m : m * m;
}

QuadraticIrrational spectral_radius(const Mat2Z& m) {
  Int t = abs(m.trace());
  Int d = m.det();
  Int disc = t * t - 4 * d;
  if (sgn(disc) <= 0 || is_square(disc)) fail(Errc::non_hyperbolic, "matrix is not hyperbolic");
  return {Int(1), -t, d, RootSign::plus};
}

RhoLength rho_length(const QuadraticIrrational& u, CfKind k) {
  Expansion ex = expand(u, k);
  if (!ex.preperiod.empty()) fail(Errc::not_reduced, "expansion has a preperiod");
  Mat2Z omega = word_to_matrix(ex.period);
  QuadraticIrrational base = spectral_radius(omega);
  QuadraticIrrational tilde = spectral_radius(omega_tilde(ex.period));
  RhoLength r{tilde, 2.0 * std::log(tilde.to_double()), 4.0 * std::log(base.to_double()),
              period_info(ex.period)};
  return r;
}

QuadraticIrrational galois_dual(const CfWord& w) {
  if (w.kind != CfKind::ecf) fail(Errc::out_of_domain, "galois dual defined for ecf words");
  validate_word(w);
  if (w.empty()) fail(Errc::out_of_domain, "empty period word");
  if (is_degenerate_period(w)) fail(Errc::degenerate_period, "parabolic period word");
  // reversed dual product: prod_{k=n..1} [[0, e_k], [1, a_k]]
  Mat2Z m = Mat2Z::identity();
  for (auto it = w.digits.rbegin(); it != w.digits.rend(); ++it)
    m = m * Mat2Z{Int(0), Int(it->e), Int(1), it->a};
  QuadraticIrrational v(m.c, m.d - m.a, -m.b, RootSign::plus);  // larger fixed point
  if (v.compare(Rat(-1)) < 0 || v.compare(Rat(1)) > 0)
    fail(Errc::out_of_domain, "dual value escaped (-1,1)");
  return v;
}

double unit_interval_map(double x, CfKind k) {
  if (!(x > 0.0 && x < 1.0)) fail(Errc::out_of_domain, "unit-interval map needs x in (0,1)");
  double u = 1.0 / x;
  switch (k) {
    case CfKind::ecf: {
      double a = 2.0 * std::floor((u + 1.0) / 2.0);
      return std::abs(u - a);
    }
    case CfKind::bcf:
      return 1.0 - (u - std::floor(u));
    case CfKind::rcf:
      return u - std::floor(u);
  }
  fail(Errc::out_of_domain, "bad kind");
}

std::pair<double, double> natural_extension_step(std::pair<double, double> uw, CfKind k) {
  auto [u, w] = uw;
  if (!(u > 1.0)) fail(Errc::out_of_domain, "natural extension needs u > 1");
  double a = 0.0;
  double e = 0.0;
  switch (k) {
    case CfKind::ecf:
      a = 2.0 * std::floor((u + 1.0) / 2.0);
      e = u >= a ? 1.0 : -1.0;
      break;
    case CfKind::bcf:
      a = std::floor(u) + 1.0;
      e = -1.0;
      break;
    case CfKind::rcf:
      a = std::floor(u);
      e = 1.0;
      break;
  }
  return {e / (u - a), e / (w - a)};
}

std::string word_str(const CfWord& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CfWord& w) {
  if (w.kind == CfKind::ecf) {
    for (const Digit& d : w.digits) os << "(" << d.a << "," << (d.e > 0 ? "+1" : "-1") << ")";
  } else {
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w.digits[i].a;
    os << "]";
  }
  return os;
}

}  // namespace ebcf
