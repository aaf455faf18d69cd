#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ebcf {

using Int = mpz_class;
using Rat = mpq_class;

// Error codes for domain violations.  One exception type carrying a code keeps
// call sites terse while letting tests assert on the exact failure kind.
enum class Errc {
  out_of_domain,
  square_discriminant,
  non_unimodular,
  non_hyperbolic,
  not_reduced,
  degenerate_period,
  not_in_s,
  not_plus_word,
  wrong_discriminant_class,
  unit_not_applicable,
  not_stabilizer,
  lambda_not_expanding,
  invalid_query,
  not_coprime,
  unrepresentable,
  oracle_bound_exceeded,
  parse_error,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// floor(a / b) for b > 0
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// floor / ceil of a canonical rational (denominator > 0)
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline std::size_t hash_int(const Int& x) {
  mpz_srcptr p = x.get_mpz_t();
  std::size_t h = mpz_sgn(p) < 0 ? 0x9e3779b97f4a7c15ull : 0x517cc1b727220a95ull;
  for (std::size_t i = 0, n = mpz_size(p); i < n; ++i)
    h = (h ^ mpz_getlimbn(p, static_cast<mp_size_t>(i))) * 0x100000001b3ull;
  return h;
}

inline std::size_t hash_mix(std::size_t a, std::size_t b) {
  return a ^ (b + 0x9e3779b97f4a7c15ull + (a << 6) + (a >> 2));
}

// Parse "p" or "p/q" into a canonical rational; q must be positive.
inline Rat parse_rat(const std::string& s) {
  try {
    Rat r(s);
    if (sgn(r.get_den()) <= 0) fail(Errc::parse_error, "rational with nonpositive denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(Errc::parse_error, "bad rational: " + s);
  }
}

}  // namespace ebcf
