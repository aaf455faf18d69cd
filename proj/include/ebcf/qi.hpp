#pragma once

#include <ostream>
#include <string>

#include "ebcf/ints.hpp"
#include "ebcf/mat2z.hpp"

namespace ebcf {

enum class RootSign : int { minus = -1, plus = +1 };

inline RootSign flip(RootSign s) { return s == RootSign::plus ? RootSign::minus : RootSign::plus; }

// Sign of X + Y*sqrt(D) for nonsquare D > 0.  Returns -1, 0 or +1 (0 only for
// X = Y = 0; a nonsquare D makes X + Y*sqrt(D) = 0 impossible otherwise).
int sign_linear_in_sqrt(const Int& x, const Int& y, const Int& d);

// A real quadratic irrational, the root (-B + s*sqrt(B^2-4AC)) / (2A) of
// A X^2 + B X + C with A,B,C coprime integers, A > 0 and nonsquare positive
// discriminant.  Canonical form makes equality field equality.
class QuadraticIrrational {
 public:
  QuadraticIrrational(Int A, Int B, Int C, RootSign s);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  RootSign root_sign() const { return sign_; }
  Int discriminant() const { return b_ * b_ - 4 * a_ * c_; }

  QuadraticIrrational conjugate() const { return {a_, b_, c_, flip(sign_)}; }

  // Galois trace and norm: w + w* = -B/A, w w* = C/A.
  Rat field_trace() const;
  Rat field_norm() const;

  Int floor() const;

  // Sign of (value - r); never 0 (the value is irrational).
  int compare(const Rat& r) const;
  int compare(long n) const { return compare(Rat(n)); }
  // Sign of (value - other); requires the same discriminant.
  int compare(const QuadraticIrrational& o) const;

  // Image under the Moebius action of m (requires det m = +-1).
  QuadraticIrrational apply_mobius(const Mat2Z& m) const;

  double to_double() const;

  bool operator==(const QuadraticIrrational& o) const = default;
  std::size_t hash() const;

  std::string str() const;  // "A,B,C,+" canonical triple form

 private:
  Int a_, b_, c_;
  RootSign sign_;
};

struct QiHash {
  std::size_t operator()(const QuadraticIrrational& w) const { return w.hash(); }
};

// Reduction flags: w > 1 with conjugate in (-1,1) / (0,1) / (-1,0).
struct Classification {
  bool e_reduced = false;
  bool b_reduced = false;
  bool rcf_reduced = false;
};

Classification classify(const QuadraticIrrational& w);

// Parse "A,B,C,+" / "A,B,C,-".
QuadraticIrrational parse_qi(const std::string& s);

std::ostream& operator<<(std::ostream& os, const QuadraticIrrational& w);

}  // namespace ebcf
