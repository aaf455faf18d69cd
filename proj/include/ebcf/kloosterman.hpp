#pragma once

#include <vector>

#include "ebcf/ints.hpp"

namespace ebcf {

// Lattice regions for congruence pair counting N_{q,h}(R) = #{(x,y) in R :
// x*y = h (mod q)}.  Two shapes cover everything the library needs:
//
//   rectangle:  x in [x_lo, x_hi),  y in [y_lo, y_hi)        (half-open)
//   under_line: x in [x_lo, x_hi),  0 <= y <= c + sign*x     (y inclusive)
//
// Endpoints are exact rationals; only integer lattice points are counted.
enum class RegionKind { rectangle, under_line };

struct Region {
  RegionKind kind = RegionKind::rectangle;
  Rat x_lo, x_hi;
  Rat y_lo, y_hi;  // rectangle only
  Int line_c;      // under_line only: f(x) = line_c + line_sign * x
  int line_sign = 1;

  static Region rect(const Rat& x_lo, const Rat& x_hi, const Rat& y_lo, const Rat& y_hi);
  static Region under_line(const Rat& x_lo, const Rat& x_hi, const Int& c, int sign);

  Rat x_length() const { return x_hi - x_lo; }
};

// Number of integers n with lo <= n < hi.
Int interval_count(const Rat& lo, const Rat& hi);
// Number of integers n with lo <= n < hi and n = a (mod m); m >= 1.
Int interval_count_ap(const Rat& lo, const Rat& hi, const Int& a, const Int& m);

// Euler's totient by trial division (single argument; sieve-free).
Int phi_of(const Int& q);

// Exact count of lattice pairs (x, y) in the region with x*y = h (mod q).
// Iterates the q residue classes of one coordinate and counts the other in
// closed form, so the cost is O(q) modular steps plus O(1) per class instead
// of O(area).  Any h is accepted (it is reduced mod q first); q >= 1.
//
// For under_line regions the validity conditions are enforced exactly:
// interval length at most q and f(x) within [0, q] on the closed hull of the
// interval (invalid_query otherwise).
Int count_pairs(const Int& q, const Int& h, const Region& region);

// Reference implementation: double loop over every lattice point.  Guarded by
// a cell budget (oracle_bound_exceeded above ~1e8 cells).
Int count_pairs_naive(const Int& q, const Int& h, const Region& region);

// Main-term comparison: main = phi(q)/q^2 * area(region), and the error is
// normalized by q^0.55 (slightly above the square-root cancellation exponent
// so empirical passes are stable).  Requires gcd(h, q) = 1 (not_coprime).
struct Deviation {
  Int count;
  double main = 0.0;
  double normalized_error = 0.0;
};

Deviation main_term_deviation(const Int& q, const Int& h, const Region& region);

// Batch driver, parallel over the list of moduli; output order matches input.
struct DeviationRow {
  long q = 0;
  long h = 0;
  Int count;
  double main = 0.0;
  double normalized_error = 0.0;
};

std::vector<DeviationRow> deviation_batch(const std::vector<long>& qs, long h,
                                          const Region& region, int threads = 0);

}  // namespace ebcf
