#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ebcf/kloosterman.hpp"

using namespace ebcf;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code;
  }
  REQUIRE(false);  // expected a library error
  return Errc::out_of_domain;
}

long phi_naive(long n) {
  long c = 0;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++c;
  return c;
}

}  // namespace

TEST_CASE("interval counting helpers") {
  CHECK(interval_count(0, 5) == 5);
  CHECK(interval_count(Rat(1, 2), Rat(7, 2)) == 3);  // 1, 2, 3
  CHECK(interval_count(Rat(-3, 2), 2) == 3);         // -1, 0, 1
  CHECK(interval_count(3, 3) == 0);
  CHECK(interval_count(5, 2) == 0);
  CHECK(interval_count(-7, -2) == 5);  // -7 .. -3

  CHECK(interval_count_ap(0, 20, 2, 5) == 4);  // 2, 7, 12, 17
  CHECK(interval_count_ap(0, 20, 0, 5) == 4);  // 0, 5, 10, 15
  CHECK(interval_count_ap(2, 3, 2, 7) == 1);
  CHECK(interval_count_ap(Rat(-11, 2), Rat(11, 2), 1, 3) == 4);  // -5, -2, 1, 4
  CHECK(interval_count_ap(0, 100, 13, 1) == 100);
  CHECK(thrown_code([] { interval_count_ap(0, 10, 0, 0); }) == Errc::invalid_query);

  // Consistency: summing the residue classes recovers the plain count.
  for (long m = 1; m <= 6; ++m) {
    Rat lo(-17, 3), hi(41, 4);
    Int total = 0;
    for (long a = 0; a < m; ++a) total += interval_count_ap(lo, hi, a, m);
    CHECK(total == interval_count(lo, hi));
  }
}

TEST_CASE("euler phi by trial division") {
  for (long n = 1; n <= 200; ++n) CHECK(phi_of(n) == phi_naive(n));
  CHECK(phi_of(1) == 1);
  CHECK(phi_of(4) == 2);
  CHECK(phi_of(12) == 4);
  CHECK(phi_of(10007) == 10006);  // prime
  CHECK(phi_of(Int(10007) * 10007) == Int(10007) * 10006);
  CHECK(thrown_code([] { phi_of(0); }) == Errc::out_of_domain);
}

TEST_CASE("worked pair counts on small rectangles") {
  // q=5, h=1 on [0,5)^2: (1,1), (2,3), (3,2), (4,4).
  CHECK(count_pairs(5, 1, Region::rect(0, 5, 0, 5)) == 4);
  // Modulus one: the congruence always holds.
  CHECK(count_pairs(1, 0, Region::rect(0, 10, 0, 10)) == 100);
  CHECK(count_pairs(1, 123, Region::rect(0, 10, 0, 10)) == 100);
  // q=7, h=-1 on [0,7)^2: (1,6), (2,3), (3,2), (4,5), (5,4), (6,1).
  CHECK(count_pairs(7, -1, Region::rect(0, 7, 0, 7)) == 6);
  // Rational endpoints select x in {1, 2}: pairs (1,1) and (2,2) mod 3.
  CHECK(count_pairs(3, 1, Region::rect(Rat(1, 2), Rat(5, 2), 0, 3)) == 2);
  // Empty and degenerate rectangles.
  CHECK(count_pairs(5, 1, Region::rect(4, 4, 0, 5)) == 0);
  CHECK(count_pairs(5, 1, Region::rect(7, 2, 0, 5)) == 0);
  // Non-coprime h is fine for raw counting: xy = 2 (mod 4) on [0,4)^2
  // has solutions (1,2), (2,1), (2,3), (3,2).
  CHECK(count_pairs(4, 2, Region::rect(0, 4, 0, 4)) == 4);
  CHECK(thrown_code([] { count_pairs(0, 1, Region::rect(0, 1, 0, 1)); }) == Errc::out_of_domain);
}

TEST_CASE("worked pair counts under a line") {
  // q=5, h=1, y <= 5-x on [0,5): per x in {1,2,3} exactly one inverse fits.
  CHECK(count_pairs(5, 1, Region::under_line(0, 5, 5, -1)) == 3);
  // Top edge inclusive: x=1, f(1)=1, y=1 with 1*1 = 1 (mod 2).
  CHECK(count_pairs(2, 1, Region::under_line(1, 2, 2, -1)) == 1);
  // Rising line: f(x) = x on [0,5); y <= x with xy = 1 (mod 5):
  // x=1:y=1; x=2:y=3>2 no; x=3:y=2 yes; x=4:y=4 yes.
  CHECK(count_pairs(5, 1, Region::under_line(0, 5, 0, 1)) == 3);
  // Empty interval.
  CHECK(count_pairs(5, 1, Region::under_line(3, 3, 4, -1)) == 0);

  // Validity: interval longer than q.
  CHECK(thrown_code([] { count_pairs(5, 1, Region::under_line(0, Rat(11, 2), 5, -1)); }) ==
        Errc::invalid_query);
  // Validity: line escapes [0, q] on the closed hull.
  CHECK(thrown_code([] { count_pairs(5, 1, Region::under_line(0, 1, 6, 1)); }) ==
        Errc::invalid_query);
  CHECK(thrown_code([] { count_pairs(5, 1, Region::under_line(0, 2, -1, 1)); }) ==
        Errc::invalid_query);
  CHECK(thrown_code([] { count_pairs(5, 1, Region::under_line(0, 2, 1, -1)); }) ==
        Errc::invalid_query);
}

TEST_CASE("fast path matches the naive double loop") {
  std::mt19937 rng(0xEBCF);
  auto pick = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };

  for (long q = 1; q <= 200; ++q) {
    for (int rep = 0; rep < 10; ++rep) {
      // Random rectangle with rational endpoints, possibly negative/empty.
      Rat xlo(pick(-60, 60), pick(1, 3));
      Rat xhi = xlo + Rat(pick(-5, 80), pick(1, 3));
      Rat ylo(pick(-60, 60), pick(1, 3));
      Rat yhi = ylo + Rat(pick(-5, 80), pick(1, 3));
      xlo.canonicalize(); xhi.canonicalize(); ylo.canonicalize(); yhi.canonicalize();
      long h = pick(-q, q);
      Region r = Region::rect(xlo, xhi, ylo, yhi);
      CHECK(count_pairs(q, h, r) == count_pairs_naive(q, h, r));
    }
    for (int rep = 0; rep < 10; ++rep) {
      // Random valid under-line region: interval inside [0, q), line kept
      // inside [0, q] on the closed hull.
      long span = std::min<long>(q - 1, 12);
      long a = span > 0 ? pick(0, q - 1 - span) : 0;
      Rat xlo(3 * a + pick(0, 2), 3);
      Rat xhi = xlo + Rat(pick(0, 3 * span), 3);
      xlo.canonicalize(); xhi.canonicalize();
      int sign = pick(0, 1) ? 1 : -1;
      long c;
      if (sign == 1) {
        // f(x) = c + x stays in [0, q] iff 0 <= c <= q - ceil(x_hi).
        c = pick(0, q - rat_ceil(xhi).get_si());
      } else {
        // f(x) = c - x stays in [0, q] iff ceil(x_hi) <= c <= q + floor(x_lo).
        c = pick(rat_ceil(xhi).get_si(), q + rat_floor(xlo).get_si());
      }
      long h = pick(-q, q);
      Region r = Region::under_line(xlo, xhi, c, sign);
      CHECK(count_pairs(q, h, r) == count_pairs_naive(q, h, r));
    }
  }
}

TEST_CASE("translation invariance by full periods") {
  std::mt19937 rng(2026);
  auto pick = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  for (long q : {13L, 37L, 101L}) {
    for (int rep = 0; rep < 8; ++rep) {
      Rat xlo(pick(-40, 40), pick(1, 2)), ylo(pick(-40, 40), pick(1, 2));
      Rat xhi = xlo + pick(0, 50), yhi = ylo + pick(0, 50);
      long h = pick(1, q);
      Region base = Region::rect(xlo, xhi, ylo, yhi);
      Int n0 = count_pairs(q, h, base);
      CHECK(count_pairs(q, h, Region::rect(xlo + q, xhi + q, ylo, yhi)) == n0);
      CHECK(count_pairs(q, h, Region::rect(xlo - 2 * q, xhi - 2 * q, ylo, yhi)) == n0);
      CHECK(count_pairs(q, h, Region::rect(xlo, xhi, ylo + 5 * q, yhi + 5 * q)) == n0);
    }
  }
}

TEST_CASE("main term and normalized deviation") {
  // Full-period square at a prime: the count is exactly phi(q) and the main
  // term is phi(q)/q^2 * q^2, so the deviation is numerically negligible.
  {
    Deviation d = main_term_deviation(10007, 1, Region::rect(0, 10007, 0, 10007));
    CHECK(d.count == 10006);
    CHECK(d.main == doctest::Approx(10006.0).epsilon(1e-12));
    CHECK(d.normalized_error < 1e-6);
  }
  // Triangle under f(x) = q - x: the main term is phi(q)/2.
  {
    Int q = 10007;
    Deviation d = main_term_deviation(q, 1, Region::under_line(0, Rat(q), q, -1));
    CHECK(d.main == doctest::Approx(5003.0).epsilon(1e-12));
    CHECK(d.normalized_error < 10.0);
  }
  // Tiny worked example: q=2, h=1 on [0,2)^2 gives the single pair (1,1) and
  // main = (1/4) * 4 = 1.
  {
    Deviation d = main_term_deviation(2, 1, Region::rect(0, 2, 0, 2));
    CHECK(d.count == 1);
    CHECK(d.main == doctest::Approx(1.0).epsilon(1e-15));
  }
  // Random subsquares at medium primes stay within the empirical bound used
  // by the acceptance gate (normalized by q^0.55).
  {
    std::mt19937 rng(7);
    for (long q : {1009L, 4001L, 9973L}) {
      for (int rep = 0; rep < 4; ++rep) {
        long a = std::uniform_int_distribution<long>(0, q / 2)(rng);
        long len = std::uniform_int_distribution<long>(q / 4, q / 2)(rng);
        Deviation d = main_term_deviation(q, rep % 2 ? 1 : -1,
                                          Region::rect(a, a + len, a / 2, a / 2 + len));
        CHECK(d.normalized_error <= 10.0);
      }
    }
  }
  CHECK(thrown_code([] { main_term_deviation(6, 2, Region::rect(0, 6, 0, 6)); }) ==
        Errc::not_coprime);
  CHECK(thrown_code([] { main_term_deviation(6, -3, Region::rect(0, 6, 0, 6)); }) ==
        Errc::not_coprime);
}

TEST_CASE("deviation batches are deterministic and match single calls") {
  std::vector<long> qs = {3, 5, 7, 11, 101, 997};
  Region r = Region::rect(0, 90, 5, 95);
  auto rows1 = deviation_batch(qs, 1, r, 1);
  auto rows4 = deviation_batch(qs, 1, r, 4);
  REQUIRE(rows1.size() == qs.size());
  REQUIRE(rows4.size() == qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Deviation d = main_term_deviation(qs[i], 1, r);
    CHECK(rows1[i].q == qs[i]);
    CHECK(rows1[i].count == d.count);
    CHECK(rows1[i].main == d.main);
    CHECK(rows1[i].normalized_error == d.normalized_error);
    CHECK(rows4[i].count == d.count);
    CHECK(rows4[i].main == d.main);
    CHECK(rows4[i].normalized_error == d.normalized_error);
  }
}
