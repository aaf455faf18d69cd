#include "ebcf/totient.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

namespace ebcf {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 kMaxN = 2'500'000;  // keeps phi(m)(N-m)^2 / m^2 < 2^64 everywhere

Int int_of_u128(u128 v) {
  Int hi(static_cast<unsigned long>(v >> 64));
  return (hi << 64) + Int(static_cast<unsigned long>(v));
}

// Partial sums over one index range, absorbed term by term.
struct RawSums {
  u128 s0 = 0, s0_odd = 0, s0_even = 0;
  FixedQ s1, s1_odd, s1_even, s2, s2_odd, s2_even, s2t_odd, s2t_even;

  void absorb(u64 m, u64 phi, u64 n, u64 even_cap) {
    u64 m2 = m * m;
    if (m <= n) {
      s0 += phi;
      s1 += fixed_ratio(phi, m);
      s2 += fixed_ratio(phi, m2);
      if (m & 1) {
        u64 d = n - m;
        s0_odd += phi;
        s1_odd += fixed_ratio(phi, m);
        s2_odd += fixed_ratio(phi, m2);
        s2t_odd += fixed_ratio(u128(phi) * d * d, m2);
      }
      if (m % 4 == 0) {
        u64 d = n - m;
        s2t_even += fixed_ratio(u128(phi) * d * d, m2);
      }
    }
    if (m % 4 == 0 && m <= even_cap) {
      s0_even += phi;
      s1_even += fixed_ratio(u128(phi) * 2, m);
      s2_even += fixed_ratio(u128(phi) * 4, m2);
    }
  }

  void fold(const RawSums& o) {
    s0 += o.s0;
    s0_odd += o.s0_odd;
    s0_even += o.s0_even;
    s1 += o.s1;
    s1_odd += o.s1_odd;
    s1_even += o.s1_even;
    s2 += o.s2;
    s2_odd += o.s2_odd;
    s2_even += o.s2_even;
    s2t_odd += o.s2t_odd;
    s2t_even += o.s2t_even;
  }
};

TotientSums pack(u64 n, const RawSums& r) {
  TotientSums t;
  t.n = n;
  t.s0 = int_of_u128(r.s0);
  t.s0_odd = int_of_u128(r.s0_odd);
  t.s0_even = int_of_u128(r.s0_even);
  t.s1 = r.s1;
  t.s1_odd = r.s1_odd;
  t.s1_even = r.s1_even;
  t.s2 = r.s2;
  t.s2_odd = r.s2_odd;
  t.s2_even = r.s2_even;
  t.s2t_odd = r.s2t_odd;
  t.s2t_even = r.s2t_even;
  return t;
}

u64 even_cap_of(u64 n) { return 4 * (n / 2); }

void check_n(u64 n) {
  if (n < 1) fail(Errc::out_of_domain, "cutoff must be positive");
  if (n > kMaxN) fail(Errc::unrepresentable, "cutoff exceeds the fixed-point ceiling");
}

double log_d(u64 n) { return std::log(static_cast<double>(n)); }

}  // namespace

PhiSieve::PhiSieve(std::uint32_t limit) : phi(static_cast<std::size_t>(limit) + 1, 0) {
  std::vector<std::uint32_t> primes;
  std::vector<bool> composite(phi.size(), false);
  if (limit >= 1) phi[1] = 1;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      phi[i] = i - 1;
    }
    for (std::uint32_t p : primes) {
      u64 ip = u64(i) * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        phi[ip] = phi[i] * p;
        break;
      }
      phi[ip] = phi[i] * (p - 1);
    }
  }
}

double FixedQ::to_double() const {
  return std::ldexp(static_cast<double>(raw >> 64), 0) +
         std::ldexp(static_cast<double>(static_cast<u64>(raw)), -64);
}

FixedQ fixed_ratio(u128 num, u64 den) {
  u128 q = num / den, r = num % den;
  return FixedQ{(q << 64) + (u128(r) << 64) / den};
}

TotientSums totient_sums(u64 n, int threads) {
  check_n(n);
  u64 hi = std::max(n, even_cap_of(n));
  PhiSieve sieve(static_cast<std::uint32_t>(hi));
  constexpr u64 kChunk = 1 << 16;
  u64 nchunks = (hi + kChunk) / kChunk;
  std::vector<RawSums> parts(nchunks);
  int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
  for (u64 c = 0; c < nchunks; ++c) {
    u64 lo = std::max<u64>(1, c * kChunk), up = std::min(hi, (c + 1) * kChunk - 1);
    for (u64 m = lo; m <= up; ++m) parts[c].absorb(m, sieve.phi[m], n, even_cap_of(n));
  }
  RawSums total;
  for (const RawSums& p : parts) total.fold(p);  // fixed order: deterministic
  return pack(n, total);
}

TotientSums totient_sums_reference(u64 n) {
  check_n(n);
  u64 hi = std::max(n, even_cap_of(n));
  PhiSieve sieve(static_cast<std::uint32_t>(hi));
  RawSums total;
  for (u64 m = 1; m <= hi; ++m) total.absorb(m, sieve.phi[m], n, even_cap_of(n));
  return pack(n, total);
}

TotientSumsExact totient_sums_exact(u64 n) {
  check_n(n);
  if (n > 20000) fail(Errc::unrepresentable, "exact rational path is for small cutoffs");
  u64 hi = std::max(n, even_cap_of(n));
  PhiSieve sieve(static_cast<std::uint32_t>(hi));
  TotientSumsExact t;
  t.n = n;
  for (u64 m = 1; m <= hi; ++m) {
    Int phi(static_cast<unsigned long>(sieve.phi[m]));
    Rat inv_m(phi, Int(static_cast<unsigned long>(m)));
    inv_m.canonicalize();
    Rat inv_m2 = inv_m / Int(static_cast<unsigned long>(m));
    if (m <= n) {
      Int d(static_cast<unsigned long>(n - m));
      t.s0 += phi;
      t.s1 += inv_m;
      t.s2 += inv_m2;
      if (m & 1) {
        t.s0_odd += phi;
        t.s1_odd += inv_m;
        t.s2_odd += inv_m2;
        t.s2t_odd += inv_m2 * d * d;
      }
      if (m % 4 == 0) t.s2t_even += inv_m2 * d * d;
    }
    if (m % 4 == 0 && m <= even_cap_of(n)) {
      t.s0_even += phi;
      t.s1_even += inv_m * 2;
      t.s2_even += inv_m2 * 4;
    }
  }
  return t;
}

AsymptoticConstants asymptotic_constants() {
  // Euler-Maclaurin truncations; M = 512 puts every dropped term far below
  // 1e-16.  zeta(2) tail from x^-2, zeta'(2) from -log(x) x^-2, gamma from
  // the harmonic sum.
  constexpr int M = 512;
  double z2 = 0, zp2 = 0, h = 0;
  for (int m1 = 1; m1 < M; ++m1) {
    double x = m1;
    z2 += 1.0 / (x * x);
    zp2 -= std::log(x) / (x * x);
    h += 1.0 / x;
  }
  double Md = M, lM = std::log(Md);
  z2 += 1.0 / Md + 1.0 / (2 * Md * Md) + 1.0 / (6 * Md * Md * Md) -
        1.0 / (30 * std::pow(Md, 5)) + 1.0 / (42 * std::pow(Md, 7));
  // tail of sum_{m >= M} log(m)/m^2, then negate into zeta'(2)
  double tail = (lM + 1) / Md + lM / (2 * Md * Md) - (1 - 2 * lM) / (12 * Md * Md * Md) +
                (26 - 24 * lM) / (720 * std::pow(Md, 5)) -
                (1044 - 720 * lM) / (30240 * std::pow(Md, 7));
  zp2 -= tail;
  h += 1.0 / Md;  // include m = M, then correct around log M
  double gamma = h - lM - 1.0 / (2 * Md) + 1.0 / (12 * Md * Md) -
                 1.0 / (120 * std::pow(Md, 4)) + 1.0 / (252 * std::pow(Md, 6));
  return AsymptoticConstants{z2, gamma, zp2 / z2};
}

TotientMainTerms totient_main_terms(u64 n, double theta) {
  if (n < 2) fail(Errc::out_of_domain, "main terms need N >= 2");
  if (theta < 1) fail(Errc::out_of_domain, "theta must be >= 1");
  AsymptoticConstants c = asymptotic_constants();
  double N = static_cast<double>(n), lN = log_d(n), l2 = std::log(2.0);
  double base = lN + c.gamma - c.zeta_prime_over_zeta2;
  TotientMainTerms t;
  t.s0 = N * N / (2 * c.zeta2);
  t.s0_odd = t.s0_even = N * N / (3 * c.zeta2);
  t.s1 = N / c.zeta2;
  t.s1_odd = t.s1_even = 2 * N / (3 * c.zeta2);
  t.s2 = base / c.zeta2;
  t.s2_odd = 2 * (base + 2 * l2 / 3) / (3 * c.zeta2);
  t.s2_even = 2 * (base - 4 * l2 / 3) / (3 * c.zeta2);
  t.s2t_odd = 2 * N * N * (base + 2 * l2 / 3 - 1.5) / (3 * c.zeta2);
  t.s2t_even = N * N * (base - 7 * l2 / 3 - 1.5) / (6 * c.zeta2);
  t.s2_diff = 2 * std::log(theta) / (3 * c.zeta2);
  return t;
}

namespace {

// Normalization constants: pass iff |exact - main| <= cal * order(N), with
// cal frozen at 3x the largest normalized error observed at N = 1e5.
struct ErrorModel {
  const char* name;
  double (*order)(u64);
  double cal;
};

double ord_nlogn(u64 n) { return static_cast<double>(n) * log_d(n); }
double ord_logn(u64 n) { return log_d(n); }
double ord_log2n(u64 n) { return log_d(n) * log_d(n); }
double ord_logn_over_n(u64 n) { return log_d(n) / static_cast<double>(n); }
double ord_log2n_over_n(u64 n) { return log_d(n) * log_d(n) / static_cast<double>(n); }
double ord_n(u64 n) { return static_cast<double>(n); }

// cal = 3x the normalized error measured once at N = 1e5 (see the verify
// harness contract).  Below N ~ 3e4 the tilde rows can exceed these budgets:
// their O(N) bound has a larger constant outside the asymptotic regime.
constexpr ErrorModel kModels[] = {
    {"S0", ord_nlogn, 0.0398},      {"S0_odd", ord_nlogn, 0.0256},
    {"S0_even", ord_nlogn, 0.1306}, {"S1", ord_logn, 0.0398},
    {"S1_odd", ord_log2n, 0.00222}, {"S1_even", ord_log2n, 0.01134},
    {"S2", ord_logn_over_n, 0.0398},
    {"S2_odd", ord_log2n_over_n, 0.00222},
    {"S2_even", ord_log2n_over_n, 0.01134},
    {"S2t_odd", ord_n, 0.000117},   {"S2t_even", ord_n, 0.000165},
    {"S2_odd_diff", ord_log2n_over_n, 0.00741},
    {"S2_even_diff", ord_log2n_over_n, 0.00615},
};

VerifyRow make_row(const ErrorModel& m, u64 n, double exact, double predicted) {
  VerifyRow r;
  r.name = m.name;
  r.exact = exact;
  r.predicted = predicted;
  r.abs_error = std::abs(exact - predicted);
  r.normalized_error = r.abs_error / m.order(n);
  r.pass = r.normalized_error <= m.cal;
  r.gated = n < 1000;
  return r;
}

}  // namespace

std::vector<VerifyRow> totient_verify(u64 n, const Rat& theta, int threads) {
  if (theta <= 1) fail(Errc::out_of_domain, "theta must exceed 1");
  TotientSums at_n = totient_sums(n, threads);
  u64 n_theta = static_cast<u64>(mpz_class(Int(static_cast<unsigned long>(n)) /
                                           theta)  // floor(N/theta)
                                     .get_ui());
  if (n_theta < 1) fail(Errc::out_of_domain, "N/theta must be >= 1");
  TotientSums at_small = totient_sums(n_theta, threads);
  TotientMainTerms mt = totient_main_terms(n, mpq_class(theta).get_d());

  std::vector<VerifyRow> rows;
  rows.push_back(make_row(kModels[0], n, at_n.s0.get_d(), mt.s0));
  rows.push_back(make_row(kModels[1], n, at_n.s0_odd.get_d(), mt.s0_odd));
  rows.push_back(make_row(kModels[2], n, at_n.s0_even.get_d(), mt.s0_even));
  rows.push_back(make_row(kModels[3], n, at_n.s1.to_double(), mt.s1));
  rows.push_back(make_row(kModels[4], n, at_n.s1_odd.to_double(), mt.s1_odd));
  rows.push_back(make_row(kModels[5], n, at_n.s1_even.to_double(), mt.s1_even));
  rows.push_back(make_row(kModels[6], n, at_n.s2.to_double(), mt.s2));
  rows.push_back(make_row(kModels[7], n, at_n.s2_odd.to_double(), mt.s2_odd));
  rows.push_back(make_row(kModels[8], n, at_n.s2_even.to_double(), mt.s2_even));
  rows.push_back(make_row(kModels[9], n, at_n.s2t_odd.to_double(), mt.s2t_odd));
  rows.push_back(make_row(kModels[10], n, at_n.s2t_even.to_double(), mt.s2t_even));
  rows.push_back(make_row(kModels[11], n,
                          at_n.s2_odd.to_double() - at_small.s2_odd.to_double(), mt.s2_diff));
  rows.push_back(make_row(kModels[12], n,
                          at_n.s2_even.to_double() - at_small.s2_even.to_double(), mt.s2_diff));
  return rows;
}

namespace {

u128 abs_diff(u128 a, u128 b) { return a > b ? a - b : b - a; }

}  // namespace

unsigned __int128 identity_defect_odd(const TotientSums& t) {
  u128 n = t.n;
  u128 lhs = n * n * t.s2_odd.raw - 2 * n * t.s1_odd.raw +
             (u128(t.s0_odd.get_ui()) << 64);
  return abs_diff(lhs, t.s2t_odd.raw);
}

unsigned __int128 identity_defect_even(const TotientSums& t, const TotientSums& t2) {
  if (t2.n != 2 * t.n) fail(Errc::out_of_domain, "second argument must be at cutoff 2N");
  u128 n = t.n;
  u128 lhs = n * n * t.s2_even.raw - 2 * n * t.s1_even.raw +
             (u128(t.s0_even.get_ui()) << 64);
  return abs_diff(lhs, t2.s2t_even.raw);
}

}  // namespace ebcf
