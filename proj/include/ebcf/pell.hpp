#pragma once

#include <iosfwd>

#include "ebcf/cf.hpp"
#include "ebcf/mat2z.hpp"
#include "ebcf/qi.hpp"

namespace ebcf {

// Unit (x + y*sqrt(disc))/2 of the quadratic order of discriminant disc,
// so x^2 - disc*y^2 = 4*norm with norm = +-1.  x, y >= 0 throughout (we only
// handle units >= 1; inverses are conjugates and never materialise here).
struct PellUnit {
  Int x, y, disc;
  int norm = +1;
  bool operator==(const PellUnit&) const = default;
};

std::ostream& operator<<(std::ostream& os, const PellUnit& u);
std::string unit_str(const PellUnit& u);
double unit_to_double(const PellUnit& u);

PellUnit unit_mul(const PellUnit& a, const PellUnit& b);
PellUnit unit_pow(const PellUnit& base, unsigned long n);

// Eigenvalue Lambda_w(m) = c*w + d of a matrix fixing w, as a unit of w's
// order.  Throws not_stabilizer when m does not fix w or the eigenvalue is
// not integral over the order.
PellUnit lambda_eval(const Mat2Z& m, const QuadraticIrrational& w);

// Unit attached to a periodic word: Lambda of the word's matrix at the
// word's fixed point.  Its norm is the determinant of the word matrix.
PellUnit unit_from_word(const CfWord& w);

// Fundamental unit (> 1, either norm) of the order of discriminant disc,
// from one primitive rcf cycle of the principal reduced number; exact and
// unbounded.  disc must be a positive nonsquare = 0, 1 mod 4.
PellUnit pell_fundamental(const Int& disc);

// Fundamental totally positive unit: pell_fundamental squared when its norm
// is -1, otherwise pell_fundamental itself.
PellUnit pell_fundamental_plus(const Int& disc);

// Brute-force oracle: smallest y in [1, ymax] with disc*y^2 + 4*norm a
// perfect square.  norm_req in {-1, 0, +1}; 0 accepts either norm (smaller
// unit wins when both exist at the same y).  Throws oracle_bound_exceeded.
PellUnit pell_brute(const Int& disc, const Int& ymax, int norm_req = 0);

// Automorphism matrix with eigenvalue eps at w (generator of the stabilizer
// direction): [[(x-By)/2, -Cy], [Ay, (x+By)/2]] for w = (A, B, C).
Mat2Z stabilizer_from_unit(const QuadraticIrrational& w, const PellUnit& eps);

// Exponent n >= 1 with eps == base^n; throws unit_not_applicable when eps is
// not a positive power of base.
unsigned long power_decompose(const PellUnit& eps, const PellUnit& base);

// Tr(m^k) by the two-term recurrence t_k = Tr(m) t_{k-1} - det(m) t_{k-2};
// avoids forming m^k.
Int trace_power(const Mat2Z& m, unsigned long k);

}  // namespace ebcf
