#pragma once

#include <vector>

#include "ebcf/census.hpp"
#include "ebcf/cf.hpp"
#include "ebcf/word_matrix.hpp"

namespace ebcf {

// Serial reference implementations of the census counts, built on different
// algorithms than the production kernels: exhaustive matrix scans routed
// through membership(), and a loosely pruned word enumeration that leans on
// the word/value library calls instead of the optimized fixed-width filter
// arithmetic.  Intended for testing and benchmarking.

// Count of S_B(alpha, beta; n) for every n <= n_max at once: entry [n] of the
// result.  Enumerates (p', q) pairs, factors p'q + 1 over divisors to obtain
// the candidate matrices, and keeps those that membership() accepts.
std::vector<Int> s_b_histogram_bruteforce(const Rat& alpha, const Rat& beta, long n_max);

// Same for S_+ (sign = +1) / S_- (sign = -1): enumerates (p, u, v) triples
// with p | uv -+ 1 and keeps matrices that membership() accepts.
std::vector<Int> s_pm_histogram_bruteforce(const Rat& alpha, const Rat& beta, long n_max,
                                           int sign);

// Reference word count with the same semantics as count_reduced_word_dfs,
// returning the full pair tally (tally[k-1] = number of (w, k) pairs); uses
// only the generic pruning bound and library calls for every filter.
std::vector<Int> reduced_word_tally_reference(const CensusQuery& q,
                                              std::vector<QuadraticIrrational>* values = nullptr);

// Factors a matrix [[p',-p],[q',-q]] of the backward cone into its digit
// word (peeling a = ceil(p'/q') from the left), such that
// word_to_matrix(result) equals the input.  Throws not_in_s when the matrix
// is not a product of digit matrices [[a,-1],[1,0]], a >= 2.
CfWord bcf_matrix_to_word(const Mat2Z& sigma);

}  // namespace ebcf
