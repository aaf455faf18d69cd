#include "ebcf/qi.hpp"

#include <sstream>
#include <vector>

namespace ebcf {

int sign_linear_in_sqrt(const Int& x, const Int& y, const Int& d) {
  int sy = sgn(y);
  if (sy == 0) return sgn(x);
  if (sy > 0) {
    if (sgn(x) >= 0) return 1;
    return sgn(y * y * d - x * x);  // x < 0: sign decided by squares
  }
  return -sign_linear_in_sqrt(-x, -y, d);
}

QuadraticIrrational::QuadraticIrrational(Int A, Int B, Int C, RootSign s)
    : a_(std::move(A)), b_(std::move(B)), c_(std::move(C)), sign_(s) {
  if (a_ == 0) fail(Errc::out_of_domain, "leading coefficient is zero");
  Int disc = b_ * b_ - 4 * a_ * c_;
  if (sgn(disc) <= 0) fail(Errc::out_of_domain, "discriminant not positive");
  if (is_square(disc)) fail(Errc::square_discriminant, "rational root: square discriminant");
  if (sgn(a_) < 0) {  // (-A,-B,-C, -s) names the same number
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    sign_ = flip(sign_);
  }
  Int g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rat QuadraticIrrational::field_trace() const {
  Rat r(-b_, a_);
  r.canonicalize();
  return r;
}

Rat QuadraticIrrational::field_norm() const {
  Rat r(c_, a_);
  r.canonicalize();
  return r;
}

Int QuadraticIrrational::floor() const {
  // value lies strictly between (-B + r)/(2A) and (-B + r + 1)/(2A) for
  // s = +, with r = floor(sqrt(disc)); mirrored for s = -.
  Int r = isqrt(discriminant());
  Int num = sign_ == RootSign::plus ? Int(-b_ + r) : Int(-b_ - r - 1);
  Int m = floor_div(num, 2 * a_);
  // the bracket can straddle an integer; settle with exact compares
  while (compare(Rat(m + 1)) > 0) ++m;
  while (compare(Rat(m)) < 0) --m;
  return m;
}

int QuadraticIrrational::compare(const Rat& r) const {
  // sign of ( -B - 2A x/y + s sqrt(D) ) with positive denominator 2Ay
  const Int& x = r.get_num();
  const Int& y = r.get_den();
  Int lin = -b_ * y - 2 * a_ * x;
  Int coef = sign_ == RootSign::plus ? y : -y;
  int s = sign_linear_in_sqrt(lin, coef, discriminant());
  if (s == 0) fail(Errc::out_of_domain, "irrational equals rational: impossible");
  return s;
}

int QuadraticIrrational::compare(const QuadraticIrrational& o) const {
  Int d = discriminant();
  if (d != o.discriminant()) fail(Errc::out_of_domain, "comparing across fields");
  if (*this == o) return 0;
  // sign of (o.B*A - B*o.A) + (s*o.A - o.s*A) sqrt(D), denominator 2*A*o.A > 0
  Int x = o.b_ * a_ - b_ * o.a_;
  Int y = Int(static_cast<int>(sign_)) * o.a_ - Int(static_cast<int>(o.sign_)) * a_;
  int s = sign_linear_in_sqrt(x, y, d);
  if (s == 0) fail(Errc::out_of_domain, "distinct canonical forms compare equal");
  return s;
}

QuadraticIrrational QuadraticIrrational::apply_mobius(const Mat2Z& m) const {
  Int dt = m.det();
  if (dt != 1 && dt != -1) fail(Errc::non_unimodular, "Moebius action requires det = +-1");
  // substitute X = (d X' - b)/(-c X' + a) into A X^2 + B X + C
  Int A2 = a_ * m.d * m.d - b_ * m.c * m.d + c_ * m.c * m.c;
  Int B2 = -2 * a_ * m.b * m.d + b_ * (m.a * m.d + m.b * m.c) - 2 * c_ * m.a * m.c;
  Int C2 = a_ * m.b * m.b - b_ * m.a * m.b + c_ * m.a * m.a;
  if (A2 == 0) fail(Errc::out_of_domain, "image has zero leading coefficient");
  // sigma(w) - sigma(w*) = s det(sigma) sqrt(D) / A2pre: root choice follows
  RootSign s2 = dt == 1 ? sign_ : flip(sign_);
  return {std::move(A2), std::move(B2), std::move(C2), s2};
}

double QuadraticIrrational::to_double() const {
  mpf_class root(0, 128);
  mpf_class disc(discriminant(), 128);
  mpf_sqrt(root.get_mpf_t(), disc.get_mpf_t());
  mpf_class num = -mpf_class(b_, 128) + (sign_ == RootSign::plus ? root : -root);
  mpf_class val = num / (2 * mpf_class(a_, 128));
  return val.get_d();
}

std::size_t QuadraticIrrational::hash() const {
  std::size_t h = hash_mix(hash_int(a_), hash_int(b_));
  h = hash_mix(h, hash_int(c_));
  return hash_mix(h, sign_ == RootSign::plus ? 1u : 2u);
}

std::string QuadraticIrrational::str() const {
  std::ostringstream os;
  os << a_ << "," << b_ << "," << c_ << "," << (sign_ == RootSign::plus ? '+' : '-');
  return os.str();
}

Classification classify(const QuadraticIrrational& w) {
  Classification f;
  if (w.compare(Rat(1)) < 0) return f;
  QuadraticIrrational conj = w.conjugate();
  bool above_m1 = conj.compare(Rat(-1)) > 0;
  bool below_p1 = conj.compare(Rat(1)) < 0;
  bool below_0 = conj.compare(Rat(0)) < 0;
  f.e_reduced = above_m1 && below_p1;
  f.b_reduced = !below_0 && below_p1;
  f.rcf_reduced = above_m1 && below_0;
  return f;
}

QuadraticIrrational parse_qi(const std::string& s) {
  std::istringstream is(s);
  std::string tok;
  std::vector<std::string> parts;
  while (std::getline(is, tok, ',')) parts.push_back(tok);
  if (parts.size() != 4) fail(Errc::parse_error, "expected A,B,C,sign: " + s);
  RootSign sign;
  if (parts[3] == "+") sign = RootSign::plus;
  else if (parts[3] == "-") sign = RootSign::minus;
  else fail(Errc::parse_error, "root sign must be + or -: " + s);
  try {
    return {Int(parts[0]), Int(parts[1]), Int(parts[2]), sign};
  } catch (const std::invalid_argument&) {
    fail(Errc::parse_error, "bad integer in: " + s);
  }
}

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& w) { return os << w.str(); }

}  // namespace ebcf
