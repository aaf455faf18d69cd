#include "ebcf/word_matrix.hpp"

#include <algorithm>

namespace ebcf {

namespace {

// [[a, e],[1, 0]] with a >= 2 even?
bool single_digit_shape(const Mat2Z& m) {
  return m.c == 1 && m.d == 0 && m.a >= 2 && mpz_even_p(m.a.get_mpz_t()) &&
         (m.b == 1 || m.b == -1);
}

// p >= (num/den) * q with den > 0
bool rat_le(const Rat& r, const Int& q, const Int& p) { return p * r.get_den() >= r.get_num() * q; }

}  // namespace

CfWord matrix_to_word(const Mat2Z& m) {
  Int dt = m.det();
  if (dt != 1 && dt != -1) fail(Errc::not_in_s, "det must be +-1");
  if (m.mod2() == Mod2Class::other) fail(Errc::not_in_s, "matrix not I2 or J2 mod 2");

  std::vector<Digit> reversed;
  Mat2Z cur = m;
  while (!single_digit_shape(cur)) {
    int e = sgn(cur.d);
    if (e == 0 || sgn(cur.b) != e) fail(Errc::not_in_s, "entry signs do not match [[p',pe],[q',qe]]");
    Int p2 = cur.a, q2 = cur.c, p = cur.b * e, q = cur.d * e;
    if (!(p2 > p && p > q && q > 0 && p2 > q2 && q2 > q))
      fail(Errc::not_in_s, "shape inequalities p'>p>q>0, p'>q'>q violated");
    // nearest even integer to q'/q; exact since q > 0
    Int a = 2 * floor_div(q2 + q, 2 * q);
    reversed.push_back({a, e});
    cur = Mat2Z{p, p2 - a * p, q, q2 - a * q};
  }
  reversed.push_back({cur.a, static_cast<int>(cur.b.get_si())});

  CfWord w{CfKind::ecf, {reversed.rbegin(), reversed.rend()}};
  validate_word(w);
  if (!(word_to_matrix(w) == m)) fail(Errc::not_in_s, "decomposition failed to reproduce matrix");
  return w;
}

SetMembership membership(const Mat2Z& m, const Rat& alpha, const Rat& beta, const Int& trace_bound) {
  SetMembership out;
  Int dt = m.det();
  bool unimodular = dt == 1 || dt == -1;
  out.theta_tilde = unimodular && m.mod2() != Mod2Class::other;
  out.theta = out.theta_tilde && dt == 1;

  // s-shape [[p', pe],[q', qe]]
  int e = sgn(m.d);
  if (out.theta_tilde && e != 0 && sgn(m.b) == e) {
    Int p2 = m.a, q2 = m.c, p = m.b * e, q = m.d * e;
    out.s = p2 > p && p > q && q > 0 && p2 > q2 && q2 > q;
    if (out.s && dt == 1) {
      Int trace = p2 + e * q;
      bool windows = trace <= trace_bound && rat_le(alpha, q, p) && rat_le(beta, p, p2);
      out.s_plus = windows && e == 1;
      out.s_minus = windows && e == -1;
    }
  }

  // s_b-shape [[p', -p],[q', -q]] in SL2, q >= 0 allowed
  if (dt == 1 && sgn(m.a) > 0 && sgn(m.b) < 0 && sgn(m.c) > 0 && sgn(m.d) <= 0) {
    Int p2 = m.a, p = -m.b, q2 = m.c, q = -m.d;
    out.s_b = p2 > q2 && q2 > q && p2 - q <= trace_bound && rat_le(alpha, q, p) &&
              rat_le(beta, p, p2);
  }
  return out;
}

OrbitPair word_orbit_pair(const CfWord& w) {
  if (w.kind != CfKind::ecf) fail(Errc::out_of_domain, "orbit pairs are for ecf words");
  validate_word(w);
  if (w.empty()) fail(Errc::out_of_domain, "empty word");
  if (word_det_sign(w) != 1) fail(Errc::not_plus_word, "word determinant sign is -1");
  CfWord block = primitive_block(w);
  PeriodInfo info = period_info(block);
  unsigned long reps = w.size() / info.eper;
  return {word_value(block), reps};
}

CensusTriple census_triple(const Mat2Z& sigma) {
  SetMembership f = membership(sigma, Rat(1), Rat(1), sigma.trace() + 1);
  if (!f.s || sigma.det() != 1 || sgn(sigma.d) != 1)
    fail(Errc::not_in_s, "census triple needs det +1, e = +1 member of s");
  CensusTriple t{sigma.b, sigma.a, sigma.d, 0};
  t.branch = mpz_odd_p(t.m.get_mpz_t()) ? 1 : 2;
  return t;
}

Mat2Z census_triple_inverse(const CensusTriple& t) {
  if (t.m <= 0 || t.u <= 0 || t.v <= 0) fail(Errc::out_of_domain, "triple entries must be positive");
  Int prod = t.u * t.v - 1;
  if (prod % t.m != 0) fail(Errc::out_of_domain, "uv != 1 mod m");
  Mat2Z sigma{t.u, t.m, prod / t.m, t.v};
  SetMembership f = membership(sigma, Rat(1), Rat(1), sigma.trace() + 1);
  if (!f.s || sigma.det() != 1) fail(Errc::not_in_s, "triple does not invert into s");
  return sigma;
}

bool is_consecutive_convergents(const Mat2Z& sigma, const QuadraticIrrational& u) {
  if (sigma.det() != 1) return false;
  if (!(sgn(sigma.a) > 0 && sgn(sigma.b) < 0 && sgn(sigma.c) > 0 && sgn(sigma.d) <= 0)) return false;
  Int p2 = sigma.a, p = -sigma.b, q2 = sigma.c, q = -sigma.d;
  if (q == 0) {
    // base pair (a/1, 1/0): true iff the first bcf digit of u is a = p'
    if (!(p == 1 && q2 == 1 && p2 >= 2)) return false;
    return u.compare(Rat(p2 - 1)) > 0 && u.compare(Rat(p2)) < 0;
  }
  if (!(p2 > q2 && q2 > q && p2 > p && p > q)) return false;
  // p' - q'u > 0 and (p - qu)/(p' - q'u) > 1
  if (u.compare(Rat(p2, q2)) >= 0) return false;
  return u.compare(Rat(p2 - p, q2 - q)) > 0;
}

}  // namespace ebcf
