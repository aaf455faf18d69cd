#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "ebcf/totient.hpp"

using namespace ebcf;

namespace {

Int mpz_of_u128(unsigned __int128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  return (hi << 64) + Int(static_cast<unsigned long>(v));
}

// floor(q * 2^64) for a nonnegative rational
Int raw_of_rat(const Rat& q) {
  Int num = q.get_num() << 64;
  return num / q.get_den();
}

void check_fixed_close(FixedQ fixed, const Rat& exact, unsigned long max_ulps) {
  Int diff = abs(mpz_of_u128(fixed.raw) - raw_of_rat(exact));
  CHECK(diff <= max_ulps);
}

long phi_naive(long m) {
  long out = 0;
  for (long k = 1; k <= m; ++k)
    if (std::gcd(k, m) == 1) ++out;
  return out;
}

}  // namespace

TEST_CASE("linear sieve agrees with the gcd definition") {
  PhiSieve s(2000);
  CHECK(s.phi[1] == 1);
  CHECK(s.phi[2] == 1);
  CHECK(s.phi[12] == 4);
  CHECK(s.phi[1997] == 1996);  // prime
  for (long m = 1; m <= 300; ++m) CHECK(s.phi[m] == phi_naive(m));
}

TEST_CASE("asymptotic constants from Euler-Maclaurin") {
  AsymptoticConstants c = asymptotic_constants();
  CHECK(c.zeta2 == doctest::Approx(M_PI * M_PI / 6).epsilon(1e-14));
  CHECK(c.gamma == doctest::Approx(0.5772156649015329).epsilon(1e-13));
  CHECK(c.zeta_prime_over_zeta2 > -0.5700);
  CHECK(c.zeta_prime_over_zeta2 < -0.5699);
  CHECK(c.zeta_prime_over_zeta2 * c.zeta2 ==
        doctest::Approx(-0.9375482543158437).epsilon(1e-12));
}

TEST_CASE("small summatory values") {
  TotientSumsExact t = totient_sums_exact(10);
  CHECK(t.s0 == 32);
  CHECK(t.s0_odd == 19);   // phi(1)+phi(3)+phi(5)+phi(7)+phi(9)
  CHECK(t.s0_even == 26);  // phi(4)+phi(8)+phi(12)+phi(16)+phi(20)
  CHECK(totient_sums_exact(1).s0 == 1);

  // the phi(4a) closed forms belong to the even family; attaching them to
  // the odd sums (as one display suggests) fails already at N = 10
  Int phi4a_sum = 0;
  Rat phi4a_over_2a, phi4a_over_4a2;
  PhiSieve s(20);
  for (long a = 1; a <= 5; ++a) {
    phi4a_sum += static_cast<long>(s.phi[4 * a]);
    Rat t1(static_cast<long>(s.phi[4 * a]), 2 * a), t2(static_cast<long>(s.phi[4 * a]), 4 * a * a);
    t1.canonicalize();
    t2.canonicalize();
    phi4a_over_2a += t1;
    phi4a_over_4a2 += t2;
  }
  CHECK(t.s0_even == phi4a_sum);
  CHECK(t.s1_even == phi4a_over_2a);
  CHECK(t.s2_even == phi4a_over_4a2);
  CHECK(t.s0_odd != phi4a_sum);
  CHECK(t.s1_odd != phi4a_over_2a);
}

TEST_CASE("fixed-point sums track the exact rationals within term count ulps") {
  for (unsigned long n : {1ul, 2ul, 7ul, 100ul, 1234ul, 5000ul}) {
    TotientSums f = totient_sums(n);
    TotientSumsExact e = totient_sums_exact(n);
    CHECK(f.s0 == e.s0);
    CHECK(f.s0_odd == e.s0_odd);
    CHECK(f.s0_even == e.s0_even);
    check_fixed_close(f.s1, e.s1, n + 1);
    check_fixed_close(f.s1_odd, e.s1_odd, n + 1);
    check_fixed_close(f.s1_even, e.s1_even, n + 1);
    check_fixed_close(f.s2, e.s2, n + 1);
    check_fixed_close(f.s2_odd, e.s2_odd, n + 1);
    check_fixed_close(f.s2_even, e.s2_even, n + 1);
    check_fixed_close(f.s2t_odd, e.s2t_odd, n + 1);
    check_fixed_close(f.s2t_even, e.s2t_even, n + 1);
  }
}

TEST_CASE("parallel and serial kernels produce identical raw sums") {
  for (unsigned long n : {1ul, 100ul, 12345ul, 250000ul}) {
    TotientSums ref = totient_sums_reference(n);
    for (int threads : {1, 2, 8}) {
      TotientSums par = totient_sums(n, threads);
      CHECK(par.s0 == ref.s0);
      CHECK(par.s0_odd == ref.s0_odd);
      CHECK(par.s0_even == ref.s0_even);
      CHECK(par.s1 == ref.s1);
      CHECK(par.s1_odd == ref.s1_odd);
      CHECK(par.s1_even == ref.s1_even);
      CHECK(par.s2 == ref.s2);
      CHECK(par.s2_odd == ref.s2_odd);
      CHECK(par.s2_even == ref.s2_even);
      CHECK(par.s2t_odd == ref.s2t_odd);
      CHECK(par.s2t_even == ref.s2t_even);
    }
  }
}

TEST_CASE("the (N-m)^2 expansion identities hold exactly") {
  for (unsigned long n : {4ul, 10ul, 100ul, 3000ul}) {
    TotientSumsExact e = totient_sums_exact(n);
    TotientSumsExact e2 = totient_sums_exact(2 * n);
    Int N(static_cast<long>(n));
    CHECK(N * N * e.s2_odd - 2 * N * e.s1_odd + e.s0_odd == e.s2t_odd);
    CHECK(N * N * e.s2_even - 2 * N * e.s1_even + e.s0_even == e2.s2t_even);
  }
  // fixed-point defect stays within the truncation budget ~N^3 ulps
  unsigned long n = 100000;
  TotientSums t = totient_sums(n);
  TotientSums t2 = totient_sums(2 * n);
  unsigned __int128 budget = static_cast<unsigned __int128>(n) * n * (n + 4) + 2 * n;
  CHECK(identity_defect_odd(t) <= budget);
  CHECK(identity_defect_even(t, t2) <= budget);
}

TEST_CASE("main terms at the documented spots") {
  TotientMainTerms mt = totient_main_terms(1000000, 2.0);
  CHECK(mt.s0 == doctest::Approx(3.0396355092701331e11).epsilon(1e-10));
  CHECK(mt.s2_diff == doctest::Approx(0.2809219711).epsilon(1e-8));
  CHECK(totient_main_terms(100, 1.0).s2_diff == 0.0);
  CHECK(mt.s0_odd == doctest::Approx(1e12 / (3 * 1.6449340668482264)).epsilon(1e-12));
}

TEST_CASE("verify harness passes in the asymptotic regime and gates below it") {
  std::vector<VerifyRow> rows = totient_verify(100000, Rat(2));
  CHECK(rows.size() == 13);
  for (const VerifyRow& r : rows) {
    CAPTURE(r.name);
    CAPTURE(r.normalized_error);
    CHECK(r.pass);
    CHECK_FALSE(r.gated);
  }
  std::vector<VerifyRow> tiny = totient_verify(10, Rat(2));
  for (const VerifyRow& r : tiny) CHECK(r.gated);
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(totient_sums(0), Error);
  CHECK_THROWS_AS(totient_sums(3000000), Error);
  CHECK_THROWS_AS(totient_sums_exact(50000), Error);
  CHECK_THROWS_AS(totient_verify(100, Rat(1)), Error);
}
