#include "ebcf/kloosterman.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <utility>

namespace ebcf {

Region Region::rect(const Rat& x_lo, const Rat& x_hi, const Rat& y_lo, const Rat& y_hi) {
  Region r;
  r.kind = RegionKind::rectangle;
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  r.y_lo = y_lo;
  r.y_hi = y_hi;
  return r;
}

Region Region::under_line(const Rat& x_lo, const Rat& x_hi, const Int& c, int sign) {
  if (sign != 1 && sign != -1) fail(Errc::invalid_query, "line sign must be +1 or -1");
  Region r;
  r.kind = RegionKind::under_line;
  r.x_lo = x_lo;
  r.x_hi = x_hi;
  r.line_c = c;
  r.line_sign = sign;
  return r;
}

Int interval_count(const Rat& lo, const Rat& hi) {
  if (hi <= lo) return 0;
  // integers n with ceil(lo) <= n <= ceil(hi) - 1
  Int first = rat_ceil(lo), last = rat_ceil(hi) - 1;
  if (last < first) return 0;
  return last - first + 1;
}

Int interval_count_ap(const Rat& lo, const Rat& hi, const Int& a, const Int& m) {
  if (sgn(m) <= 0) fail(Errc::invalid_query, "modulus must be positive");
  if (hi <= lo) return 0;
  Int first = rat_ceil(lo), last = rat_ceil(hi) - 1;
  if (last < first) return 0;
  // #{n in [first, last] : n = a (mod m)}
  return floor_div(last - a, m) - floor_div(first - 1 - a, m);
}

Int phi_of(const Int& q) {
  if (sgn(q) <= 0) fail(Errc::out_of_domain, "phi requires a positive argument");
  Int n = q, result = q;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Canonical representative in [0, q).
Int mod_reduce(const Int& a, const Int& q) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
  return r;
}

// Solve u * v0 = h (mod q) for u.  Returns (solvable, u0, m): the solution
// set is u = u0 (mod m).  Uses the extended gcd via mpz_invert.
struct ClassSolution {
  bool solvable = false;
  Int u0, m;
};

ClassSolution solve_class(const Int& v0, const Int& h, const Int& q) {
  ClassSolution s;
  Int d = gcd(v0, q);
  if (h % d != 0) return s;
  Int qd = q / d;
  s.solvable = true;
  s.m = qd;
  if (qd == 1) {
    s.u0 = 0;
    return s;
  }
  Int inv;
  // v0/d is invertible mod q/d by construction.
  mpz_invert(inv.get_mpz_t(), Int(v0 / d).get_mpz_t(), qd.get_mpz_t());
  s.u0 = mod_reduce((h / d) * inv, qd);
  return s;
}

void validate_under_line(const Int& q, const Region& r) {
  if (r.x_length() > q)
    fail(Errc::invalid_query, "under_line interval longer than the modulus");
  if (r.x_hi <= r.x_lo) return;  // empty; nothing else to check
  // f must stay inside [0, q] on the closed hull of the interval; f is
  // linear, so the endpoint values bound it.
  Rat f_lo = Rat(r.line_c) + Rat(r.line_sign) * r.x_lo;
  Rat f_hi = Rat(r.line_c) + Rat(r.line_sign) * r.x_hi;
  Rat fmin = f_lo < f_hi ? f_lo : f_hi;
  Rat fmax = f_lo < f_hi ? f_hi : f_lo;
  if (fmin < 0 || fmax > q)
    fail(Errc::invalid_query, "line must map the interval into [0, q]");
}

Int count_rectangle(const Int& q, const Int& h, const Region& r) {
  Int total = 0;
  for (Int v0 = 0; v0 < q; ++v0) {
    Int vs = interval_count_ap(r.y_lo, r.y_hi, v0, q);
    if (vs == 0) continue;
    ClassSolution s = solve_class(v0, h, q);
    if (!s.solvable) continue;
    total += vs * interval_count_ap(r.x_lo, r.x_hi, s.u0, s.m);
  }
  return total;
}

Int count_under_line(const Int& q, const Int& h, const Region& r) {
  validate_under_line(q, r);
  Int total = 0;
  Int first = rat_ceil(r.x_lo), last = rat_ceil(r.x_hi) - 1;
  for (Int x = first; x <= last; ++x) {
    Int fx = r.line_c + r.line_sign * x;  // integer since c, x are integers
    if (fx < 0) continue;
    ClassSolution s = solve_class(mod_reduce(x, q), h, q);
    if (!s.solvable) continue;
    // y in [0, fx] with y = u0 (mod m); u0 is already in [0, m).
    if (s.u0 <= fx) total += floor_div(fx - s.u0, s.m) + 1;
  }
  return total;
}

}  // namespace

Int count_pairs(const Int& q, const Int& h, const Region& region) {
  if (sgn(q) <= 0) fail(Errc::out_of_domain, "modulus must be positive");
  Int hq = mod_reduce(h, q);
  if (region.kind == RegionKind::rectangle) return count_rectangle(q, hq, region);
  return count_under_line(q, hq, region);
}

Int count_pairs_naive(const Int& q, const Int& h, const Region& region) {
  if (sgn(q) <= 0) fail(Errc::out_of_domain, "modulus must be positive");
  if (region.kind == RegionKind::under_line) validate_under_line(q, region);
  Int hq = mod_reduce(h, q);
  Int x_first = rat_ceil(region.x_lo), x_last = rat_ceil(region.x_hi) - 1;
  if (x_last < x_first) return 0;

  // Cell budget so a misplaced call cannot spin forever.
  Int cols = x_last - x_first + 1, rows;
  if (region.kind == RegionKind::rectangle) {
    rows = interval_count(region.y_lo, region.y_hi);
  } else {
    rows = abs(region.line_c) + abs(x_first) + abs(x_last) + 1;
  }
  if (cols * rows > 100'000'000)
    fail(Errc::oracle_bound_exceeded, "naive pair count: region too large");

  Int total = 0;
  for (Int x = x_first; x <= x_last; ++x) {
    Int y_first, y_last;
    if (region.kind == RegionKind::rectangle) {
      y_first = rat_ceil(region.y_lo);
      y_last = rat_ceil(region.y_hi) - 1;
    } else {
      y_first = 0;
      y_last = region.line_c + region.line_sign * x;
    }
    for (Int y = y_first; y <= y_last; ++y)
      if (mod_reduce(x * y - hq, q) == 0) ++total;
  }
  return total;
}

Deviation main_term_deviation(const Int& q, const Int& h, const Region& region) {
  if (sgn(q) <= 0) fail(Errc::out_of_domain, "modulus must be positive");
  if (gcd(h, q) != 1) fail(Errc::not_coprime, "main term requires gcd(h, q) = 1");

  Deviation d;
  d.count = count_pairs(q, h, region);

  Rat area;
  if (region.kind == RegionKind::rectangle) {
    Rat lx = region.x_hi - region.x_lo;
    Rat ly = region.y_hi - region.y_lo;
    if (lx < 0) lx = 0;
    if (ly < 0) ly = 0;
    area = lx * ly;
  } else {
    // integral of c + sign*x over [x_lo, x_hi]
    Rat lo = region.x_lo, hi = region.x_hi;
    if (hi < lo) hi = lo;
    area = Rat(region.line_c) * (hi - lo) + Rat(region.line_sign) * (hi * hi - lo * lo) / 2;
  }

  double phi = phi_of(q).get_d();
  double qd = q.get_d();
  d.main = phi / (qd * qd) * area.get_d();
  d.normalized_error = std::abs(d.count.get_d() - d.main) / std::pow(qd, 0.55);
  return d;
}

std::vector<DeviationRow> deviation_batch(const std::vector<long>& qs, long h,
                                          const Region& region, int threads) {
  std::vector<DeviationRow> rows(qs.size());
  int nthreads = threads > 0 ? threads : 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
#endif
  for (std::size_t i = 0; i < qs.size(); ++i) {
    Deviation d = main_term_deviation(qs[i], h, region);
    rows[i] = DeviationRow{qs[i], h, d.count, d.main, d.normalized_error};
  }
  return rows;
}

}  // namespace ebcf
