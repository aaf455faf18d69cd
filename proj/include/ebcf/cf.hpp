#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ebcf/mat2z.hpp"
#include "ebcf/qi.hpp"

namespace ebcf {

// Three continued-fraction flavours share one digit shape (a, e):
//   ecf:  u = a1 + e1/(a2 + e2/(...)),  a even >= 2, e = +-1
//   bcf:  u = a1 - 1/(a2 - 1/(...)),    a >= 2, e = -1 fixed
//   rcf:  u = a1 + 1/(a2 + 1/(...)),    a >= 1, e = +1 fixed
enum class CfKind { ecf, bcf, rcf };

const char* kind_name(CfKind k);
CfKind parse_kind(const std::string& s);

struct Digit {
  Int a;
  int e;
  bool operator==(const Digit&) const = default;
};

struct CfWord {
  CfKind kind = CfKind::ecf;
  std::vector<Digit> digits;

  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  bool operator==(const CfWord&) const = default;
};

// Convenience builders (validate digits for the kind).
CfWord ecf_word(std::vector<std::pair<long, int>> digits);
CfWord bcf_word(std::vector<long> digits);
CfWord rcf_word(std::vector<long> digits);

// Throws unless every digit is legal for w.kind.
void validate_word(const CfWord& w);

// Digit matrix M(a,e) = [[a, e], [1, 0]]; det = -e.
Mat2Z digit_matrix(const Digit& d);

// First digit of u > 1 under the kind's shift.
Digit first_digit(const QuadraticIrrational& u, CfKind k);

// One Gauss-shift step: T(u) = e/(u - a) (ecf/rcf), 1/(a - u) (bcf).
QuadraticIrrational shift(const QuadraticIrrational& u, CfKind k);

struct Expansion {
  CfWord preperiod;  // empty iff u is purely periodic for the kind
  CfWord period;     // primitive by construction (first-revisit cycle)
};

// Full eventually-periodic expansion of u > 1 via exact orbit hashing.
Expansion expand(const QuadraticIrrational& u, CfKind k, std::size_t max_steps = 1u << 20);

struct ConvergentPair {
  Int p, q;
  bool operator==(const ConvergentPair&) const = default;
};

// (p_k, q_k) for k = 0..n with p0=1, q0=0, p1=a1, q1=1,
// p_k = a_k p_{k-1} + e_{k-1} p_{k-2} (and likewise q).
std::vector<ConvergentPair> convergents(const CfWord& w);

// Product M(a1,e1)...M(an,en) = [[p_n, p_{n-1}e_n], [q_n, q_{n-1}e_n]].
Mat2Z word_to_matrix(const CfWord& w);

// det of the word matrix: prod (-e_i).
int word_det_sign(const CfWord& w);

bool is_primitive(const CfWord& w);
CfWord primitive_block(const CfWord& w);

// All-(2,-1) ecf / all-2 bcf periods are parabolic (no hyperbolic fixed point).
bool is_degenerate_period(const CfWord& w);

// Value of the purely periodic expansion [overline(w)]: the fixed point > 1.
QuadraticIrrational word_value(const CfWord& period_word);

struct PeriodInfo {
  std::size_t per;   // word length
  int delta;         // prod (-e_i)
  std::size_t eper;  // per if delta = +1, else 2*per
};
PeriodInfo period_info(const CfWord& period_word);

// Omega, and Omega-tilde = Omega when delta = +1 else Omega^2.
Mat2Z omega_matrix(const CfWord& period_word);
Mat2Z omega_tilde(const CfWord& period_word);

// Largest-magnitude eigenvalue (|t| + sqrt(t^2-4d))/2 of a hyperbolic matrix.
QuadraticIrrational spectral_radius(const Mat2Z& m);

struct RhoLength {
  QuadraticIrrational radius;  // spectral radius of Omega-tilde
  double rho;                  // 2 log radius(Omega-tilde)
  double rho_squared;          // 4 log radius(Omega): the always-square convention
  PeriodInfo info;
};

// Geodesic-style length data of a purely periodic u (throws not_reduced else).
RhoLength rho_length(const QuadraticIrrational& u, CfKind k);

// Value in (-1,1) of the reversed dual expansion of an ecf period word;
// equals -conj(word_value(w)).
QuadraticIrrational galois_dual(const CfWord& ecf_period_word);

// Float diagnostics: the conjugated map on (0,1) and the natural extension.
double unit_interval_map(double x, CfKind k);
std::pair<double, double> natural_extension_step(std::pair<double, double> uw, CfKind k);

std::ostream& operator<<(std::ostream& os, const CfWord& w);
std::string word_str(const CfWord& w);

}  // namespace ebcf
