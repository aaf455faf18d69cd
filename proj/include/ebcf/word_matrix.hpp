#pragma once

#include "ebcf/cf.hpp"

namespace ebcf {

// Unique factorisation of an even-word matrix into digit matrices M(a,e),
// peeling the last digit a = 2*floor(q'/(2q) + 1/2) from the right.
// Accepts the single-digit shape [[a, e],[1, 0]] as a base case.
CfWord matrix_to_word(const Mat2Z& m);

// Membership flags for the matrix cones used by the census:
//   theta_tilde: det = +-1 and congruent to I2 or J2 mod 2
//   theta:       theta_tilde with det = +1
//   s:           [[p', pe],[q', qe]] with p'>p>q>0, p'>q'>q, theta_tilde shape
//   s_plus/s_minus: det +1 members of s with last-digit sign e = +1 / -1,
//       trace <= bound and the (alpha, beta) windows p >= alpha q, p' >= beta p
//   s_b:         [[p', -p],[q', -q]] in SL2 with p >= alpha q, p' >= beta p,
//       p' > q' > q >= 0 and p' - q <= bound
struct SetMembership {
  bool s = false;
  bool s_plus = false;
  bool s_minus = false;
  bool s_b = false;
  bool theta = false;
  bool theta_tilde = false;
};

SetMembership membership(const Mat2Z& m, const Rat& alpha, const Rat& beta, const Int& trace_bound);

// An even word w with all-plus determinant sign corresponds to the pair
// (value, reps): its matrix equals OmegaTilde(period of value)^reps.
struct OrbitPair {
  QuadraticIrrational value;
  unsigned long reps;
};

OrbitPair word_orbit_pair(const CfWord& w);

// The counting bijection for det +1, e = +1 members of s:
// sigma = [[u, m],[q', v]] <-> (m, u, v) with uv = 1 mod m, q' = (uv-1)/m.
// branch 1: m odd (u, v even, q' odd); branch 2: m even (u, v odd, q' even).
struct CensusTriple {
  Int m, u, v;
  int branch;
};

CensusTriple census_triple(const Mat2Z& sigma);
Mat2Z census_triple_inverse(const CensusTriple& t);

// True iff sigma = [[p', -p],[q', -q]] holds two consecutive convergents of
// the bcf expansion of u (the base pair [[a, -1],[1, 0]] included).
bool is_consecutive_convergents(const Mat2Z& sigma, const QuadraticIrrational& u);

}  // namespace ebcf
