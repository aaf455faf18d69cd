#pragma once

#include <vector>

#include "ebcf/ints.hpp"
#include "ebcf/qi.hpp"

namespace ebcf {

// Counting engines for reduced quadratic irrationals ordered by the spectral
// radius of their period matrix, and for the unimodular matrix cones that
// parametrize them.  Two independent methods are provided for each count: a
// depth-first enumeration over digit words (word_dfs) and closed-form
// congruence solving over the cone coordinates (congruence).

enum class CensusKind { e_kind, b_kind };
enum class CensusMethod { word_dfs, congruence };

struct CensusQuery {
  CensusKind kind = CensusKind::e_kind;
  Rat alpha{1};  // count values w >= alpha           (>= 1)
  Rat beta1{1};  // conjugate window w* <= 1/beta1    (>= 1; E and B)
  Rat beta2{1};  // conjugate window w* >= -1/beta2   (>= 1; E only)
  // When set, the beta1 constraint degenerates to w* < 0 (the beta1 -> oo
  // limit); beta1 itself is ignored.  E-kind only.
  bool beta1_infinite = false;
  // Spectral-radius bound M > 1: count values with r(OmegaTilde) <= M,
  // i.e. length bound R = 2 log M.
  Rat radius_bound{2};
};

struct CensusResult {
  Int exact_count;
  // Leading asymptotic term at this size; NaN when the query sits outside
  // the asymptotic regime (alpha*beta1 = 1, where the constant diverges).
  double main_term = 0.0;
  double relative_deviation = 0.0;  // (exact - main)/main, NaN if main is
  double elapsed_seconds = 0.0;     // wall time of the computation
  CensusMethod method = CensusMethod::congruence;
};

// Main-term evaluators (the exact leading constants):
//   E: C(a,b1,b2) N^2,  C = (1/pi^2) log((a b2 + 1)/(a b2) * a b1/(a b1 - 1))
//   B: N^2/(2 zeta(2)) * log(a b/(a b - 1))
// N is the size parameter (radius bound M, or the trace bound of the matrix
// sets).  Returns NaN when alpha*beta1 = 1 (not infinite) where the constant
// diverges.
double census_main_term_e(const Rat& alpha, const Rat& beta1, bool beta1_inf, const Rat& beta2,
                          double n);
double census_main_term_b(const Rat& alpha, const Rat& beta, double n);

// Exact count of reduced values by word enumeration: each admissible
// primitive period word with determinant sign +1 yields one value w; keeps
// w >= alpha, the conjugate window, and spectral radius <= M, all exactly.
CensusResult count_reduced_word_dfs(const CensusQuery& q, int threads = 0);

// |S_B(alpha, beta; N)|: matrices [[p',-p],[q',-q]] in SL(2,Z) with
// p >= alpha q, p' >= beta p, p' > q' > q >= 0, p' - q <= N, counted by
// solving u = -v^{-1} (mod p) per column and counting the arithmetic
// progression in the admissible u-range.  Requires alpha*beta > 1.
CensusResult count_s_b_congruence(const Rat& alpha, const Rat& beta, const Int& n,
                                  int threads = 0);

// |S_+(alpha, beta; N)| (sign = +1) or |S_-(alpha, beta; N)| (sign = -1):
// determinant +1 members of the even cone with last-digit sign e = sign,
// windows p >= alpha q and p' >= beta p, and trace p' + e q <= N.  Split by
// the parity of p into the odd branch (u, v even, congruence mod p lifted to
// mod 2p) and the even branch (congruence uv = +-1 mod 2p).  sign = -1
// requires alpha*beta > 1.
CensusResult count_s_pm_congruence(const Rat& alpha, const Rat& beta, const Int& n, int sign,
                                   int threads = 0);

// Word-count breakdown used by the two-method experiment.  tally[k-1] is the
// exact number of pairs (w, k) with w counted by the value filters and
// Tr(OmegaTilde(w)^k) <= N; k = 1 gives the primitive count.
struct TwoMethodReport {
  CensusResult minus_part;   // |S_-(alpha, beta1; N)| (zero when beta1 infinite)
  CensusResult plus_part;    // |S_+(alpha, beta2; N)|
  CensusResult combined;     // sum vs C(alpha,beta1,beta2) N^2
  bool with_dfs = false;
  Int dfs_minus;             // window-filtered word counts by last-digit sign
  Int dfs_plus;
  bool dfs_agrees = false;   // word totals match both congruence counts
  std::vector<Int> value_tally;  // (w,k) pairs under the value filters
  Int value_total;           // sum of value_tally
  Int boundary_discrepancy;  // (dfs_minus + dfs_plus) - value_total
  double elapsed_seconds = 0.0;
};

// Runs both congruence counts and compares their sum against
// C(alpha,beta1,beta2) N^2; with_dfs additionally enumerates the same matrix
// sets by words (must agree exactly) and the value-filtered pair counts,
// whose difference isolates the boundary mismatch between the value windows
// and the matrix windows.  Requires alpha*beta1 > 1 or beta1 infinite.
TwoMethodReport two_method_census_detail(const Rat& alpha, const Rat& beta1, bool beta1_inf,
                                          const Rat& beta2, const Int& n, bool with_dfs,
                                          int threads = 0);
CensusResult two_method_census(const Rat& alpha, const Rat& beta1, bool beta1_inf,
                                 const Rat& beta2, const Int& n, int threads = 0);

// All reduced values of discriminant Delta (E-reduced: w > 1, |w*| < 1;
// B-reduced: w > 1, 0 < w* < 1), by complete scan of minimal polynomials
// A x^2 + B x + C with A in [1, Delta] and (2A+B)^2 < Delta.  Sorted by
// (A, B, C).  Delta must be positive, = 0 or 1 mod 4, and not a square.
std::vector<QuadraticIrrational> enumerate_reduced_by_disc(const Int& delta, CensusKind kind);

}  // namespace ebcf
