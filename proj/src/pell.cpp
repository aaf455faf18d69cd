#include "ebcf/pell.hpp"

#include <ostream>
#include <sstream>
#include <utility>

namespace ebcf {

namespace {

Int half_exact(const Int& v, const char* what) {
  if (mpz_odd_p(v.get_mpz_t())) fail(Errc::unit_not_applicable, what);
  return v / 2;
}

void check_same_order(const PellUnit& a, const PellUnit& b) {
  if (a.disc != b.disc)
    fail(Errc::wrong_discriminant_class, "units live in different orders");
}

// x^2 - disc y^2 must come out at +-4; returns the norm sign.
int unit_norm_of(const Int& x, const Int& y, const Int& disc, Errc on_fail,
                 const char* what) {
  Int n4 = x * x - disc * y * y;
  if (n4 == 4) return +1;
  if (n4 == -4) return -1;
  fail(on_fail, what);
}

}  // namespace

std::string unit_str(const PellUnit& u) {
  std::ostringstream os;
  if (mpz_even_p(u.x.get_mpz_t()) && mpz_even_p(u.y.get_mpz_t()))
    os << (u.x / 2) << "+" << (u.y / 2) << "*sqrt(" << u.disc << ")";
  else
    os << "(" << u.x << "+" << u.y << "*sqrt(" << u.disc << "))/2";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PellUnit& u) { return os << unit_str(u); }

double unit_to_double(const PellUnit& u) {
  mpf_class f(u.disc, 128);
  f = sqrt(f);
  f = (mpf_class(u.x, 128) + mpf_class(u.y, 128) * f) / 2;
  return f.get_d();
}

PellUnit unit_mul(const PellUnit& a, const PellUnit& b) {
  check_same_order(a, b);
  PellUnit r;
  r.disc = a.disc;
  r.x = half_exact(a.x * b.x + a.disc * a.y * b.y, "product leaves the order");
  r.y = half_exact(a.x * b.y + a.y * b.x, "product leaves the order");
  r.norm = unit_norm_of(r.x, r.y, r.disc, Errc::unit_not_applicable, "product is not a unit");
  return r;
}

PellUnit unit_pow(const PellUnit& base, unsigned long n) {
  if (n == 0) return PellUnit{Int(2), Int(0), base.disc, +1};
  PellUnit acc = base;
  for (unsigned long i = 1; i < n; ++i) acc = unit_mul(acc, base);
  return acc;
}

PellUnit lambda_eval(const Mat2Z& m, const QuadraticIrrational& w) {
  if (abs(m.det()) != 1) fail(Errc::non_unimodular, "stabilizers are unimodular");
  if (!(w.apply_mobius(m) == w)) fail(Errc::not_stabilizer, "matrix does not fix w");
  // Lambda = c*w + d = ((2*A*d - c*B) + c*s*sqrt(disc)) / (2*A); a matrix
  // fixing a primitive (A, B, C) has A | c, which makes both parts integral.
  Int ca = m.c, num = 2 * w.a() * m.d - m.c * w.b();
  if (ca % w.a() != 0 || num % w.a() != 0)
    fail(Errc::not_stabilizer, "eigenvalue is not in the order");
  PellUnit r;
  r.disc = w.discriminant();
  r.x = num / w.a();
  r.y = ca / w.a();
  if (w.root_sign() == RootSign::minus) r.y = -r.y;
  if (sgn(r.x) < 0 || (sgn(r.x) == 0 && sgn(r.y) < 0)) {
    r.x = -r.x;
    r.y = -r.y;
  }
  r.norm = unit_norm_of(r.x, r.y, r.disc, Errc::not_stabilizer, "eigenvalue is not a unit");
  if (r.norm != sgn(m.det())) fail(Errc::not_stabilizer, "norm/determinant mismatch");
  return r;
}

PellUnit unit_from_word(const CfWord& w) {
  QuadraticIrrational omega = word_value(w);
  Mat2Z m = word_to_matrix(w);
  PellUnit r;
  r.disc = omega.discriminant();
  r.x = m.trace();
  // Tr^2 - 4 det = y^2 disc always (same quadratic, discriminants agree up
  // to a square); recover y exactly.
  Int num = r.x * r.x - 4 * m.det();
  if (num % r.disc != 0) fail(Errc::non_hyperbolic, "trace form is not over the order");
  Int y2 = num / r.disc;
  r.y = isqrt(y2);
  if (r.y * r.y != y2) fail(Errc::non_hyperbolic, "trace form is not over the order");
  r.norm = static_cast<int>(m.det().get_si());
  return r;
}

PellUnit pell_fundamental(const Int& disc) {
  if (disc <= 0 || is_square(disc)) fail(Errc::wrong_discriminant_class, "disc must be a positive nonsquare");
  Int rem = disc % 4;
  if (rem != 0 && rem != 1) fail(Errc::wrong_discriminant_class, "disc must be 0 or 1 mod 4");
  // Principal reduced number (r + sqrt(disc))/2 with r < sqrt(disc) maximal
  // of the right parity: rcf-reduced, so purely periodic; one primitive
  // cycle of it carries the fundamental unit as its eigenvalue.
  Int r = isqrt(disc);
  if ((r - disc) % 2 != 0) r -= 1;
  QuadraticIrrational principal(Int(1), -r, (r * r - disc) / 4, RootSign::plus);
  Expansion ex = expand(principal, CfKind::rcf);
  if (!ex.preperiod.digits.empty()) fail(Errc::not_reduced, "principal number must be purely periodic");
  return unit_from_word(ex.period);
}

PellUnit pell_fundamental_plus(const Int& disc) {
  PellUnit f = pell_fundamental(disc);
  return f.norm == +1 ? f : unit_mul(f, f);
}

PellUnit pell_brute(const Int& disc, const Int& ymax, int norm_req) {
  if (disc <= 0 || is_square(disc)) fail(Errc::wrong_discriminant_class, "disc must be a positive nonsquare");
  for (Int y = 1; y <= ymax; ++y) {
    Int dy2 = disc * y * y;
    for (int norm : {-1, +1}) {  // smaller x first
      if (norm_req != 0 && norm != norm_req) continue;
      Int x2 = dy2 + 4 * norm;
      if (x2 <= 0 || !is_square(x2)) continue;
      return PellUnit{isqrt(x2), y, disc, norm};
    }
  }
  fail(Errc::oracle_bound_exceeded, "no unit found below the search bound");
}

Mat2Z stabilizer_from_unit(const QuadraticIrrational& w, const PellUnit& eps) {
  if (eps.disc != w.discriminant())
    fail(Errc::wrong_discriminant_class, "unit belongs to a different order");
  Int x = eps.x, y = eps.y;
  if (w.root_sign() == RootSign::minus) y = -y;
  if ((x - w.b() * y) % 2 != 0) fail(Errc::unit_not_applicable, "unit not integral at w");
  return Mat2Z{(x - w.b() * y) / 2, -w.c() * y, w.a() * y, (x + w.b() * y) / 2};
}

unsigned long power_decompose(const PellUnit& eps, const PellUnit& base) {
  check_same_order(eps, base);
  if (base.x <= 0 || base.y <= 0) fail(Errc::unit_not_applicable, "base must exceed 1");
  PellUnit cur = base;
  unsigned long n = 1;
  while (n < 4096 && !(cur == eps) &&
         (cur.x < eps.x || (cur.x == eps.x && cur.y < eps.y))) {
    cur = unit_mul(cur, base);
    ++n;
  }
  if (!(cur == eps)) fail(Errc::unit_not_applicable, "not a power of the base unit");
  return n;
}

Int trace_power(const Mat2Z& m, unsigned long k) {
  Int t0 = 2, t1 = m.trace(), tr = m.trace(), det = m.det();
  if (k == 0) return t0;
  for (unsigned long i = 1; i < k; ++i) {
    Int next = tr * t1 - det * t0;  // materialise before shuffling (gmp lazy exprs)
    t0 = std::exchange(t1, std::move(next));
  }
  return t1;
}

}  // namespace ebcf
