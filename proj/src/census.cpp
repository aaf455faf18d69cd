#include "ebcf/census.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

namespace ebcf {

namespace {

using I128 = __int128;

constexpr long long kMaxCongruenceP = 50'000'000;  // loop budget for the p-sweep
constexpr long long kMaxDfsTrace = 100'000;        // keeps all filter algebra inside __int128
constexpr long long kMaxWindowPart = 1'000'000;    // numerators/denominators of alpha, beta

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

struct RatLL {
  long long num = 0, den = 1;  // den > 0, reduced
};

RatLL rat_ll(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  if (!c.get_num().fits_slong_p() || !c.get_den().fits_slong_p())
    fail(Errc::oracle_bound_exceeded, "window rational beyond desk scale");
  RatLL out{c.get_num().get_si(), c.get_den().get_si()};
  if (std::llabs(out.num) > kMaxWindowPart || out.den > kMaxWindowPart)
    fail(Errc::oracle_bound_exceeded, "window rational beyond desk scale");
  return out;
}

long long size_ll(const Int& n) {
  if (!n.fits_slong_p()) fail(Errc::oracle_bound_exceeded, "size bound beyond desk scale");
  return n.get_si();
}

long long fdiv_ll(long long a, long long b) {
  long long q = a / b;
  return q * b > a ? q - 1 : q;
}

long long cdiv_ll(long long a, long long b) { return -fdiv_ll(-a, b); }

// #{u in [lo, hi] : u = r (mod m)}, with 0 <= r < m.
long long ap_count(long long lo, long long hi, long long r, long long m) {
  if (hi < lo) return 0;
  return fdiv_ll(hi - r, m) - fdiv_ll(lo - 1 - r, m);
}

// Inverse of a mod m for gcd(a, m) = 1, m >= 1; result in [0, m).
long long inv_mod(long long a, long long m) {
  long long t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return t < 0 ? t + m : t;
}

void require_window(const Rat& v, const char* name) {
  if (v < 1) fail(Errc::invalid_query, std::string(name) + " must be >= 1");
}

// floor(n * x) and ceil(n * x) for rational x = num/den > 0 and n >= 0.
long long floor_mul(long long n, const RatLL& x) { return fdiv_ll(n * x.num, x.den); }
long long ceil_mul(long long n, const RatLL& x) { return cdiv_ll(n * x.num, x.den); }

double deviation_of(const Int& exact, double main) {
  if (std::isnan(main)) return std::numeric_limits<double>::quiet_NaN();
  if (main == 0.0) return exact == 0 ? 0.0 : std::numeric_limits<double>::quiet_NaN();
  return (exact.get_d() - main) / main;
}

// ---------------------------------------------------------------------------
// Word enumeration engine.
//
// State (p1, p0, q1, q0) holds (p_k, p_{k-1}, q_k, q_{k-1}) of the running
// digit-matrix product, e_last the final digit sign, delta = prod(-e_i).
// A word of length k is the matrix [[p1, p0*e_last], [q1, q0*e_last]], with
// trace p1 + e_last*q0.  The traversal key x_k = p_k - q_{k-1} never
// decreases under extension and lower-bounds every completed trace, so
// subtrees with x > tmax are dead.  The only path along which x stalls is
// the parabolic all-(2,-1) (ecf) / all-2 (bcf) spine, cut separately once
// every word breaking off it must exceed the trace bound.
// ---------------------------------------------------------------------------

struct DfsConfig {
  bool bcf = false;
  bool window_mode = false;
  long long tmax = 0;
  // value-mode filters
  bool check_alpha = false;
  RatLL alpha{1, 1};
  bool beta1_inf = false;   // conjugate < 0 (last sign +1) instead of beta1 window
  bool check_beta1 = false;
  RatLL inv_beta1{1, 1};    // conjugate <= 1/beta1
  bool check_beta2 = false;
  RatLL neg_inv_beta2{-1, 1};  // conjugate >= -1/beta2
  // window-mode data
  RatLL walpha{1, 1}, wbeta1{1, 1}, wbeta2{1, 1};
  bool wbeta1_inf = false;
};

struct DfsState {
  long long p1, p0, q1, q0;
  int e_last;
  int delta;
  int depth;
};

constexpr int kMaxReps = 64;

struct DfsTally {
  long long by_reps[kMaxReps] = {};
  long long window_minus = 0, window_plus = 0;

  void merge(const DfsTally& o) {
    for (int i = 0; i < kMaxReps; ++i) by_reps[i] += o.by_reps[i];
    window_minus += o.window_minus;
    window_plus += o.window_plus;
  }
};

using Path = std::vector<std::pair<long long, int>>;

// Exact root comparisons for A x^2 + B x + C, A > 0, disc > 0 nonsquare.
// root_plus = (-B + sqrt(disc)) / (2A), root_minus the conjugate.
bool root_plus_gt(long long A, long long B, long long C, const RatLL& r) {
  I128 t = (I128)2 * A * r.num + (I128)B * r.den;
  if (t < 0) return true;
  I128 disc = (I128)B * B - (I128)4 * A * C;
  return disc * r.den * r.den > t * t;
}

bool root_minus_lt(long long A, long long B, long long C, const RatLL& r) {
  I128 t = (I128)2 * A * r.num + (I128)B * r.den;
  if (t >= 0) return true;
  I128 disc = (I128)B * B - (I128)4 * A * C;
  return t * t < disc * r.den * r.den;
}

bool root_minus_gt(long long A, long long B, long long C, const RatLL& r) {
  I128 t = (I128)2 * A * r.num + (I128)B * r.den;
  if (t >= 0) return false;
  I128 disc = (I128)B * B - (I128)4 * A * C;
  return t * t > disc * r.den * r.den;
}

// Smallest period of the digit sequence.
std::size_t primitive_len(const Path& w) {
  std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return d;
  }
  return n;
}

void process_word(const DfsConfig& cfg, const DfsState& s, const Path& path, DfsTally& tally) {
  if (s.delta != +1) return;
  long long trace = s.p1 + s.e_last * s.q0;
  if (trace < 3 || trace > cfg.tmax) return;  // trace 2 is the parabolic spine

  if (cfg.window_mode) {
    // matrix families require a strictly positive second column, i.e. at
    // least two digits; windows: p >= alpha q, p' >= beta p.  Trace-2
    // members (the parabolic spine family) are added in closed form by
    // the driver, since the traversal key stalls along the spine.
    if (s.q0 < 1) return;
    if ((I128)s.p0 * cfg.walpha.den < (I128)cfg.walpha.num * s.q0) return;
    if (s.e_last < 0) {
      if (cfg.wbeta1_inf) return;
      if ((I128)s.p1 * cfg.wbeta1.den < (I128)cfg.wbeta1.num * s.p0) return;
      tally.window_minus += 1;
    } else {
      if ((I128)s.p1 * cfg.wbeta2.den < (I128)cfg.wbeta2.num * s.p0) return;
      tally.window_plus += 1;
    }
    return;
  }

  // Fixed point of the word matrix: q1 w^2 + (e q0 - p1) w - e p0 = 0.
  long long A = s.q1, B = s.e_last * s.q0 - s.p1, C = -s.e_last * s.p0;
  if (cfg.check_alpha && !root_plus_gt(A, B, C, cfg.alpha)) return;
  if (cfg.beta1_inf) {
    if (s.e_last < 0) return;  // conjugate of an e=-1 word is positive
  } else if (cfg.check_beta1 && !root_minus_lt(A, B, C, cfg.inv_beta1)) {
    return;
  }
  if (cfg.check_beta2 && !root_minus_gt(A, B, C, cfg.neg_inv_beta2)) return;

  std::size_t d = primitive_len(path);
  std::size_t j = path.size() / d;
  int delta_p = +1;
  for (std::size_t i = 0; i < d; ++i) delta_p *= -path[i].second;
  std::size_t reps = delta_p == +1 ? j : j / 2;  // delta(w)=+1 makes j even when delta_p=-1
  if (reps >= 1 && reps <= kMaxReps) tally.by_reps[reps - 1] += 1;
}

// Whether the subtree below this node can still contain counted words.
bool can_descend(const DfsConfig& cfg, const DfsState& s) {
  if (cfg.window_mode) return true;
  if (cfg.check_alpha && s.depth >= 1) {
    // every completion value lies strictly between p1/q1 and
    // (p1 + e p0)/(q1 + e q0); prune when both ends are <= alpha
    long long n0 = s.p1 + s.e_last * s.p0, d0 = s.q1 + s.e_last * s.q0;
    if (d0 > 0 && (I128)s.p1 * cfg.alpha.den <= (I128)cfg.alpha.num * s.q1 &&
        (I128)n0 * cfg.alpha.den <= (I128)cfg.alpha.num * d0)
      return false;
  }
  if (cfg.beta1_inf && s.depth >= 1) {
    // only words ending with sign +1 can pass; their trace from below this
    // node is at least (2 p1 + e p0) + q1
    if (2 * s.p1 + s.e_last * s.p0 + s.q1 > cfg.tmax) return false;
  }
  return true;
}

// Child construction outcome for digit (a, e_child).
enum class ChildKind { beyond_bound, spine_cut, ok };

ChildKind make_child(const DfsConfig& cfg, const DfsState& s, long long a, int e_child,
                     DfsState& out) {
  long long p_new = a * s.p1 + s.e_last * s.p0;
  long long q_new = a * s.q1 + s.e_last * s.q0;
  if (p_new - s.q1 > cfg.tmax) return ChildKind::beyond_bound;  // x bound, increasing in a
  if (p_new - q_new == 1) {
    // spine prefix: words breaking off at depth >= J have trace at least
    // 2J + 4 (ecf) / J + 3 (bcf); the spine itself is parabolic
    long long j = s.depth + 1;
    if ((cfg.bcf ? j + 3 : 2 * j + 4) > cfg.tmax) return ChildKind::spine_cut;
  }
  out = DfsState{p_new, s.p1, q_new, s.q1, e_child, s.delta * (e_child == 1 ? -1 : +1),
                 s.depth + 1};
  return ChildKind::ok;
}

DfsState root_state() { return DfsState{1, 0, 0, 1, +1, +1, 0}; }

// Serial traversal of the subtree rooted at `s` (whose own word has already
// been processed); `path` holds the digits from the word root down to `s`.
void dfs_run(const DfsConfig& cfg, const DfsState& s, Path& path, DfsTally& tally) {
  struct Frame {
    DfsState st;
    long long a;
    int e_idx;
  };
  const long long a0 = 2, astep = cfg.bcf ? 1 : 2;
  const int n_e = cfg.bcf ? 1 : 2;
  static constexpr int kE[2] = {-1, +1};

  if (!can_descend(cfg, s)) return;
  std::vector<Frame> stack;
  stack.push_back({s, a0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    bool pushed = false;
    while (f.a > 0) {
      if (f.e_idx >= n_e) {
        f.a += astep;
        f.e_idx = 0;
      }
      DfsState child;
      ChildKind kind = make_child(cfg, f.st, f.a, kE[f.e_idx], child);
      if (kind == ChildKind::beyond_bound) {
        f.a = 0;  // larger digits only grow the bound key
        break;
      }
      ++f.e_idx;
      if (kind == ChildKind::spine_cut) {
        f.a += astep;  // both signs of this digit sit on the spine
        f.e_idx = 0;
        continue;
      }
      path.emplace_back(f.a, kE[f.e_idx - 1]);
      process_word(cfg, child, path, tally);
      if (can_descend(cfg, child)) {
        stack.push_back({child, a0, 0});
        pushed = true;
        break;
      }
      path.pop_back();
    }
    if (!pushed) {
      // frame exhausted; its digit belongs to the caller only for the root
      stack.pop_back();
      if (!stack.empty()) path.pop_back();
    }
  }
}

// Parallel driver: a two-level frontier of subtree roots, processed with
// dynamic scheduling; the totals are integer sums, so the result does not
// depend on the schedule.
DfsTally dfs_count(const DfsConfig& cfg, int threads) {
  struct Task {
    DfsState st;
    Path path;
  };
  std::vector<Task> tasks;
  DfsTally base;

  const long long a0 = 2, astep = cfg.bcf ? 1 : 2;
  const int n_e = cfg.bcf ? 1 : 2;
  static constexpr int kE[2] = {-1, +1};
  const long long wide_root = 64;  // expand small first digits one level more

  DfsState root = root_state();
  for (long long a1 = a0;; a1 += astep) {
    DfsState c1;
    ChildKind k1 = make_child(cfg, root, a1, -1, c1);
    if (k1 == ChildKind::beyond_bound) break;
    if (k1 == ChildKind::spine_cut) continue;
    for (int i1 = 0; i1 < n_e; ++i1) {
      make_child(cfg, root, a1, kE[i1], c1);
      Path p1{{a1, kE[i1]}};
      process_word(cfg, c1, p1, base);
      if (!can_descend(cfg, c1)) continue;
      if (a1 > wide_root) {
        tasks.push_back({c1, p1});
        continue;
      }
      for (long long a2 = a0;; a2 += astep) {
        DfsState c2;
        ChildKind k2 = make_child(cfg, c1, a2, -1, c2);
        if (k2 == ChildKind::beyond_bound) break;
        if (k2 == ChildKind::spine_cut) continue;
        for (int i2 = 0; i2 < n_e; ++i2) {
          make_child(cfg, c1, a2, kE[i2], c2);
          Path p2{{a1, kE[i1]}, {a2, kE[i2]}};
          process_word(cfg, c2, p2, base);
          if (can_descend(cfg, c2)) tasks.push_back({c2, std::move(p2)});
        }
      }
    }
  }

  int nthreads = resolve_threads(threads);
#pragma omp parallel num_threads(nthreads)
  {
    DfsTally local;
    Path path;
#pragma omp for schedule(dynamic, 1) nowait
    for (long long i = 0; i < (long long)tasks.size(); ++i) {
      path = tasks[i].path;
      dfs_run(cfg, tasks[i].st, path, local);
    }
#pragma omp critical(ebcf_census_dfs_merge)
    base.merge(local);
  }

  if (cfg.window_mode && cfg.tmax >= 2 && !cfg.wbeta1_inf) {
    // the unipotent members [[k+1,-k],[k,-(k-1)]] = matrix((2,-1)^k),
    // k >= 2, all of trace 2; windows give k(an-ad) <= an and
    // k(bn-bd) <= bd, and at least one must bind
    long long kmax = std::numeric_limits<long long>::max();
    bool bounded = false;
    if (cfg.walpha.num > cfg.walpha.den) {
      kmax = std::min(kmax, cfg.walpha.num / (cfg.walpha.num - cfg.walpha.den));
      bounded = true;
    }
    if (cfg.wbeta1.num > cfg.wbeta1.den) {
      kmax = std::min(kmax, cfg.wbeta1.den / (cfg.wbeta1.num - cfg.wbeta1.den));
      bounded = true;
    }
    if (!bounded) fail(Errc::invalid_query, "alpha*beta1 must exceed 1");
    if (kmax >= 2) base.window_minus += kmax - 1;
  }
  return base;
}

long long trace_bound_of_radius(const Rat& m) {
  // r(Omega~) <= M  <=>  integer trace <= floor(M + 1/M)
  Rat mm = m;
  mm.canonicalize();
  Int num = mm.get_num() * mm.get_num() + mm.get_den() * mm.get_den();
  Int den = mm.get_num() * mm.get_den();
  Int t = floor_div(num, den);
  if (!t.fits_slong_p() || t.get_si() > kMaxDfsTrace)
    fail(Errc::oracle_bound_exceeded, "radius bound beyond desk scale");
  return t.get_si();
}

DfsConfig value_config(const CensusQuery& q) {
  DfsConfig cfg;
  cfg.bcf = q.kind == CensusKind::b_kind;
  cfg.window_mode = false;
  cfg.tmax = trace_bound_of_radius(q.radius_bound);
  require_window(q.alpha, "alpha");
  if (q.alpha > 1) {
    cfg.check_alpha = true;
    cfg.alpha = rat_ll(q.alpha);
  }
  if (q.beta1_infinite) {
    if (cfg.bcf) fail(Errc::invalid_query, "infinite beta is an e-kind configuration");
    cfg.beta1_inf = true;
  } else {
    require_window(q.beta1, "beta1");
    if (q.beta1 > 1) {
      cfg.check_beta1 = true;
      cfg.inv_beta1 = rat_ll(Rat(1) / q.beta1);
    }
  }
  if (!cfg.bcf) {
    require_window(q.beta2, "beta2");
    if (q.beta2 > 1) {
      cfg.check_beta2 = true;
      cfg.neg_inv_beta2 = rat_ll(Rat(-1) / q.beta2);
    }
  }
  return cfg;
}

}  // namespace

double census_main_term_e(const Rat& alpha, const Rat& beta1, bool beta1_inf, const Rat& beta2,
                          double n) {
  double a = Rat(alpha).get_d(), b2 = Rat(beta2).get_d();
  double sum = std::log((a * b2 + 1) / (a * b2));
  if (!beta1_inf) {
    Rat ab1 = alpha * beta1;
    if (ab1 == 1) return std::numeric_limits<double>::quiet_NaN();
    double x = ab1.get_d();
    sum += std::log(x / (x - 1));
  }
  return sum / (M_PI * M_PI) * n * n;
}

double census_main_term_b(const Rat& alpha, const Rat& beta, double n) {
  Rat ab = alpha * beta;
  if (ab == 1) return std::numeric_limits<double>::quiet_NaN();
  double x = ab.get_d();
  // 1/(2 zeta(2)) = 3/pi^2
  return 3.0 / (M_PI * M_PI) * std::log(x / (x - 1)) * n * n;
}

CensusResult count_reduced_word_dfs(const CensusQuery& q, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  if (q.radius_bound <= 1) fail(Errc::invalid_query, "radius bound must exceed 1");
  DfsConfig cfg = value_config(q);
  DfsTally tally = dfs_count(cfg, threads);

  CensusResult r;
  r.exact_count = Int(static_cast<long>(tally.by_reps[0]));
  double m = q.radius_bound.get_d();
  r.main_term = cfg.bcf ? census_main_term_b(q.alpha, q.beta1, m)
                        : census_main_term_e(q.alpha, q.beta1, q.beta1_infinite, q.beta2, m);
  r.relative_deviation = deviation_of(r.exact_count, r.main_term);
  r.method = CensusMethod::word_dfs;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

CensusResult count_s_b_congruence(const Rat& alpha, const Rat& beta, const Int& n, int threads) {
  auto t0 = std::chrono::steady_clock::now();
  require_window(alpha, "alpha");
  require_window(beta, "beta");
  if (alpha * beta <= 1) fail(Errc::invalid_query, "alpha*beta must exceed 1");
  if (n < 1) fail(Errc::invalid_query, "size bound must be positive");
  long long nn = size_ll(n);
  RatLL a = rat_ll(alpha), b = rat_ll(beta);

  // p' >= beta p and p' <= N + q <= N + p/alpha bound the column height
  Int pmax_i = floor_div(Int(static_cast<long>(nn)) * static_cast<long>(a.num) * static_cast<long>(b.den),
                         Int(static_cast<long>(a.num)) * static_cast<long>(b.num) -
                             Int(static_cast<long>(a.den)) * static_cast<long>(b.den));
  if (!pmax_i.fits_slong_p() || pmax_i.get_si() > kMaxCongruenceP)
    fail(Errc::oracle_bound_exceeded, "size bound beyond desk scale");
  long long pmax = pmax_i.get_si();

  // p = 1 forces q = 0, q' = 1, so p' ranges over [max(2, ceil(beta)), N]
  long long total = std::max(0LL, nn - std::max(2LL, cdiv_ll(b.num, b.den)) + 1);

  int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads) reduction(+ : total)
  for (long long p = 2; p <= pmax; ++p) {
    long long vmax = floor_mul(p, {a.den, a.num});  // q <= p/alpha
    long long lo = ceil_mul(p, b);                  // p' >= beta p
    long long sub = 0;
    for (long long v = 1; v <= vmax; ++v) {
      if (std::gcd(v, p) != 1) continue;
      long long r = p - inv_mod(v, p);  // p' = -q^{-1} (mod p)
      sub += ap_count(lo, nn + v, r, p);
    }
    total += sub;
  }

  CensusResult r;
  r.exact_count = Int(static_cast<long>(total));
  r.main_term = census_main_term_b(alpha, beta, double(nn));
  r.relative_deviation = deviation_of(r.exact_count, r.main_term);
  r.method = CensusMethod::congruence;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

CensusResult count_s_pm_congruence(const Rat& alpha, const Rat& beta, const Int& n, int sign,
                                   int threads) {
  auto t0 = std::chrono::steady_clock::now();
  if (sign != 1 && sign != -1) fail(Errc::invalid_query, "sign must be +1 or -1");
  require_window(alpha, "alpha");
  require_window(beta, "beta");
  if (sign < 0 && alpha * beta <= 1)
    fail(Errc::invalid_query, "alpha*beta must exceed 1 for the minus family");
  if (n < 1) fail(Errc::invalid_query, "size bound must be positive");
  long long nn = size_ll(n);
  RatLL a = rat_ll(alpha), b = rat_ll(beta);

  Int pmax_i = sign > 0
                   ? floor_div(Int(static_cast<long>(nn)) * static_cast<long>(b.den),
                               Int(static_cast<long>(b.num)))
                   : floor_div(Int(static_cast<long>(nn)) * static_cast<long>(a.num) * static_cast<long>(b.den),
                               Int(static_cast<long>(a.num)) * static_cast<long>(b.num) -
                                   Int(static_cast<long>(a.den)) * static_cast<long>(b.den));
  if (!pmax_i.fits_slong_p() || pmax_i.get_si() > kMaxCongruenceP)
    fail(Errc::oracle_bound_exceeded, "size bound beyond desk scale");
  long long pmax = pmax_i.get_si();

  long long total = 0;
  int nthreads = resolve_threads(threads);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads) reduction(+ : total)
  for (long long p = 2; p <= pmax; ++p) {
    long long lo = ceil_mul(p, b);  // p' >= beta p
    long long sub = 0;
    if (p % 2 == 1) {
      // odd p: u, v even and (uv -+ 1)/p odd, i.e. uv = p +- 1 (mod 2p);
      // with v = 2b, that is u b = (p +- 1)/2 (mod p) plus u even
      long long t = sign > 0 ? (p + 1) / 2 : (p - 1) / 2;
      long long bmax = fdiv_ll(p * a.den, 2 * a.num);  // v = 2b <= p/alpha
      for (long long bb = 1; bb <= bmax; ++bb) {
        if (std::gcd(bb, p) != 1) continue;
        long long u0 = (I128)t * inv_mod(bb, p) % p;
        long long u1 = u0 % 2 == 0 ? u0 : u0 + p;  // even representative mod 2p
        long long hi = sign > 0 ? nn - 2 * bb : nn + 2 * bb;
        sub += ap_count(lo, hi, u1, 2 * p);
      }
    } else {
      // even p: u, v odd and (uv -+ 1)/p even, i.e. uv = +-1 (mod 2p)
      long long vmax = floor_mul(p, {a.den, a.num});
      for (long long v = 1; v <= vmax; v += 2) {
        if (std::gcd(v, p) != 1) continue;
        long long vb = inv_mod(v, 2 * p);
        long long r = sign > 0 ? vb : 2 * p - vb;
        long long hi = sign > 0 ? nn - v : nn + v;
        sub += ap_count(lo, hi, r, 2 * p);
      }
    }
    total += sub;
  }

  CensusResult r;
  r.exact_count = Int(static_cast<long>(total));
  double nd = double(nn), ab = Rat(alpha * beta).get_d();
  r.main_term = sign > 0 ? nd * nd / (M_PI * M_PI) * std::log((ab + 1) / ab)
                         : nd * nd / (M_PI * M_PI) * std::log(ab / (ab - 1));
  r.relative_deviation = deviation_of(r.exact_count, r.main_term);
  r.method = CensusMethod::congruence;
  r.elapsed_seconds = seconds_since(t0);
  return r;
}

TwoMethodReport two_method_census_detail(const Rat& alpha, const Rat& beta1, bool beta1_inf,
                                          const Rat& beta2, const Int& n, bool with_dfs,
                                          int threads) {
  auto t0 = std::chrono::steady_clock::now();
  require_window(alpha, "alpha");
  require_window(beta2, "beta2");
  if (!beta1_inf) {
    require_window(beta1, "beta1");
    if (alpha * beta1 <= 1) fail(Errc::invalid_query, "alpha*beta1 must exceed 1");
  }
  if (n < 1) fail(Errc::invalid_query, "size bound must be positive");

  TwoMethodReport rep;
  if (beta1_inf) {
    rep.minus_part.exact_count = 0;
    rep.minus_part.main_term = 0.0;
    rep.minus_part.relative_deviation = 0.0;
    rep.minus_part.method = CensusMethod::congruence;
  } else {
    rep.minus_part = count_s_pm_congruence(alpha, beta1, n, -1, threads);
  }
  rep.plus_part = count_s_pm_congruence(alpha, beta2, n, +1, threads);

  rep.combined.exact_count = rep.minus_part.exact_count + rep.plus_part.exact_count;
  rep.combined.main_term = census_main_term_e(alpha, beta1, beta1_inf, beta2, size_ll(n));
  rep.combined.relative_deviation = deviation_of(rep.combined.exact_count, rep.combined.main_term);
  rep.combined.method = CensusMethod::congruence;

  if (with_dfs) {
    rep.with_dfs = true;
    long long nn = size_ll(n);
    if (nn > 5'000) fail(Errc::oracle_bound_exceeded, "word cross-check beyond desk scale");

    DfsConfig wcfg;
    wcfg.window_mode = true;
    wcfg.tmax = nn;
    wcfg.walpha = rat_ll(alpha);
    wcfg.wbeta1_inf = beta1_inf;
    if (!beta1_inf) wcfg.wbeta1 = rat_ll(beta1);
    wcfg.wbeta2 = rat_ll(beta2);
    DfsTally wt = dfs_count(wcfg, threads);
    rep.dfs_minus = Int(static_cast<long>(wt.window_minus));
    rep.dfs_plus = Int(static_cast<long>(wt.window_plus));
    rep.dfs_agrees = rep.dfs_minus == rep.minus_part.exact_count &&
                     rep.dfs_plus == rep.plus_part.exact_count;

    CensusQuery vq;
    vq.kind = CensusKind::e_kind;
    vq.alpha = alpha;
    vq.beta1 = beta1_inf ? Rat(1) : beta1;
    vq.beta1_infinite = beta1_inf;
    vq.beta2 = beta2;
    vq.radius_bound = Rat(static_cast<long>(nn));
    DfsTally vt = dfs_count(value_config(vq), threads);
    rep.value_total = 0;
    int top = kMaxReps;
    while (top > 1 && vt.by_reps[top - 1] == 0) --top;
    for (int k = 0; k < top; ++k) {
      rep.value_tally.push_back(Int(static_cast<long>(vt.by_reps[k])));
      rep.value_total += static_cast<long>(vt.by_reps[k]);
    }
    rep.boundary_discrepancy = rep.dfs_minus + rep.dfs_plus - rep.value_total;
  }
  rep.elapsed_seconds = seconds_since(t0);
  rep.combined.elapsed_seconds = rep.elapsed_seconds;
  return rep;
}

CensusResult two_method_census(const Rat& alpha, const Rat& beta1, bool beta1_inf,
                                 const Rat& beta2, const Int& n, int threads) {
  return two_method_census_detail(alpha, beta1, beta1_inf, beta2, n, false, threads).combined;
}

std::vector<QuadraticIrrational> enumerate_reduced_by_disc(const Int& delta, CensusKind kind) {
  if (delta <= 0 || is_square(delta) || !(delta % 4 == 0 || delta % 4 == 1))
    fail(Errc::wrong_discriminant_class, "discriminant must be positive, 0 or 1 mod 4, nonsquare");
  if (!delta.fits_slong_p() || delta.get_si() > 100'000)
    fail(Errc::oracle_bound_exceeded, "discriminant beyond desk scale");
  long long d = delta.get_si();
  long long s = isqrt(Int(static_cast<long>(d))).get_si();

  std::vector<QuadraticIrrational> out;
  for (long long A = 1; A <= d; ++A) {
    // reduced values need |2A + B| < sqrt(disc)  (w > 1 and w* < 1)
    for (long long B = -2 * A - s; B <= -2 * A + s; ++B) {
      long long num = B * B - d;
      if (num % (4 * A) != 0) continue;
      long long C = num / (4 * A);
      if (std::gcd(std::gcd(A, std::llabs(B)), std::llabs(C)) != 1) continue;
      QuadraticIrrational w(Int(static_cast<long>(A)), Int(static_cast<long>(B)),
                            Int(static_cast<long>(C)), RootSign::plus);
      Classification cl = classify(w);
      if (kind == CensusKind::e_kind ? cl.e_reduced : cl.b_reduced) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadraticIrrational& x, const QuadraticIrrational& y) {
    if (x.a() != y.a()) return x.a() < y.a();
    if (x.b() != y.b()) return x.b() < y.b();
    return x.c() < y.c();
  });
  return out;
}

}  // namespace ebcf
