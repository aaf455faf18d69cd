#pragma once

#include <ostream>

#include "ebcf/ints.hpp"

namespace ebcf {

enum class Mod2Class { i2, j2, other };

// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2Z {
  Int a, b, c, d;

  static Mat2Z identity() { return {1, 0, 0, 1}; }

  Mat2Z operator*(const Mat2Z& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }

  bool operator==(const Mat2Z& o) const = default;

  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }

  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }

  // Requires det = ±1.
  Mat2Z inverse_unimodular() const {
    Int dt = det();
    if (dt == 1) return {d, -b, -c, a};
    if (dt == -1) return {-d, b, c, -a};
    fail(Errc::non_unimodular, "matrix inverse requires det = +-1");
  }

  Mat2Z pow(unsigned long k) const {
    Mat2Z r = identity(), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  Mod2Class mod2() const {
    int pa = mpz_odd_p(a.get_mpz_t()), pb = mpz_odd_p(b.get_mpz_t());
    int pc = mpz_odd_p(c.get_mpz_t()), pd = mpz_odd_p(d.get_mpz_t());
    if (pa && pd && !pb && !pc) return Mod2Class::i2;
    if (!pa && !pd && pb && pc) return Mod2Class::j2;
    return Mod2Class::other;
  }

  std::size_t hash() const {
    return hash_mix(hash_mix(hash_int(a), hash_int(b)), hash_mix(hash_int(c), hash_int(d)));
  }
};

inline std::ostream& operator<<(std::ostream& os, const Mat2Z& m) {
  return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

}  // namespace ebcf
