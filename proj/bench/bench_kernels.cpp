// Benchmark of the parallel counting kernels against their serial reference
// implementations.  Each block checks that both paths produce identical
// results before reporting timings, so the benchmark doubles as a coarse
// integration test.  Run: ./bench_kernels
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "ebcf/census.hpp"
#include "ebcf/census_reference.hpp"
#include "ebcf/ints.hpp"
#include "ebcf/kloosterman.hpp"
#include "ebcf/totient.hpp"

using namespace ebcf;

namespace {

int g_bad = 0;

template <typename F>
double timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-44s %9.3f s %9.3f s %7.1fx   %s\n", name, serial, parallel,
              serial / (parallel > 0 ? parallel : 1e-9), equal ? "equal" : "MISMATCH");
  if (!equal) ++g_bad;
}

}  // namespace

int main() {
  int hw = omp_get_max_threads();
  std::printf("threads available: %d\n\n", hw);
  std::printf("%-44s %11s %11s %8s   %s\n", "kernel", "serial", "parallel", "speedup",
              "results");

  {
    const std::uint64_t n = 2000000;
    TotientSums ref, par;
    double ts = timed([&] { ref = totient_sums_reference(n); });
    double tp = timed([&] { par = totient_sums(n, hw); });
    bool eq = ref.s0 == par.s0 && ref.s1 == par.s1 && ref.s2 == par.s2 &&
              ref.s2t_odd == par.s2t_odd && ref.s2t_even == par.s2t_even;
    row("totient summatory family, N = 2e6", ts, tp, eq);
  }

  {
    CensusResult one, many;
    double ts = timed([&] { one = count_s_b_congruence(Rat(2), Rat(1), Int(8000), 1); });
    double tp = timed([&] { many = count_s_b_congruence(Rat(2), Rat(1), Int(8000), hw); });
    row("backward congruence census, N = 8000", ts, tp, one.exact_count == many.exact_count);
  }

  {
    CensusResult one, many;
    double ts =
        timed([&] { one = two_method_census(Rat(2), Rat(1), false, Rat(1), Int(8000), 1); });
    double tp =
        timed([&] { many = two_method_census(Rat(2), Rat(1), false, Rat(1), Int(8000), hw); });
    row("even congruence census, N = 8000", ts, tp, one.exact_count == many.exact_count);
  }

  {
    CensusQuery q;
    q.alpha = Rat(2);
    q.radius_bound = Rat(2500);
    CensusResult one, many;
    double ts = timed([&] { one = count_reduced_word_dfs(q, 1); });
    double tp = timed([&] { many = count_reduced_word_dfs(q, hw); });
    row("word enumeration census, radius 2500", ts, tp, one.exact_count == many.exact_count);
  }

  {
    // closed-form congruence solving vs the exhaustive membership scan
    const long n = 400;
    CensusResult fast;
    std::vector<Int> hist;
    double tp = timed([&] { fast = count_s_b_congruence(Rat(2), Rat(1), Int(n), hw); });
    double ts = timed([&] { hist = s_b_histogram_bruteforce(Rat(2), Rat(1), n); });
    row("backward census vs brute scan, N = 400", ts, tp, fast.exact_count == hist[n]);
  }

  {
    CensusQuery q;
    q.alpha = Rat(2);
    q.radius_bound = Rat(300);
    CensusResult fast;
    std::vector<Int> tally;
    double tp = timed([&] { fast = count_reduced_word_dfs(q, hw); });
    double ts = timed([&] { tally = reduced_word_tally_reference(q); });
    row("word census vs reference walker, radius 300", ts, tp, fast.exact_count == tally[0]);
  }

  {
    std::vector<long> qs;
    for (long q = 10001; qs.size() < 120; q += 2) {
      Int p;
      mpz_nextprime(p.get_mpz_t(), Int(q).get_mpz_t());
      q = static_cast<long>(p.get_si());
      qs.push_back(q);
    }
    Region box = Region::rect(Rat(0), Rat(5000), Rat(0), Rat(5000));
    std::vector<DeviationRow> ser, par;
    double ts = timed([&] {
      for (long q : qs) {
        Deviation d = main_term_deviation(Int(q), Int(1), box);
        ser.push_back({q, 1, d.count, d.main, d.normalized_error});
      }
    });
    double tp = timed([&] { par = deviation_batch(qs, 1, box, hw); });
    bool eq = ser.size() == par.size();
    for (std::size_t i = 0; eq && i < ser.size(); ++i)
      eq = ser[i].count == par[i].count && ser[i].q == par[i].q;
    row("congruence-pair deviations, 120 moduli", ts, tp, eq);
  }

  std::printf("\n%s\n", g_bad == 0 ? "all kernels agree with their references"
                                   : "KERNEL/REFERENCE MISMATCH");
  return g_bad == 0 ? 0 : 1;
}
