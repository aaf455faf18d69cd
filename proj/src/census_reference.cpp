#include "ebcf/census_reference.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "ebcf/mat2z.hpp"

namespace ebcf {

namespace {

void require_ge1(const Rat& v, const char* name) {
  if (v < 1) fail(Errc::invalid_query, std::string(name) + " must be >= 1");
}

long long upper_p_bound(const Rat& alpha, const Rat& beta, long n_max) {
  // p' <= N * ab/(ab - 1) whenever the window product exceeds 1
  Rat ab = alpha * beta;
  if (ab <= 1) fail(Errc::invalid_query, "alpha*beta must exceed 1");
  Rat bound = Rat(n_max) * ab / (ab - 1);
  Int f = rat_floor(bound);
  if (!f.fits_slong_p()) fail(Errc::oracle_bound_exceeded, "size bound beyond desk scale");
  return f.get_si();
}

}  // namespace

std::vector<Int> s_b_histogram_bruteforce(const Rat& alpha, const Rat& beta, long n_max) {
  require_ge1(alpha, "alpha");
  require_ge1(beta, "beta");
  if (n_max < 0) fail(Errc::invalid_query, "size bound must be nonnegative");
  std::vector<Int> hist(n_max + 1, Int(0));
  long long pmax = upper_p_bound(alpha, beta, n_max);
  Int bound(n_max);

  for (long long pp = 2; pp <= pmax; ++pp) {
    for (long long q = std::max(0LL, pp - n_max); q + 2 <= pp; ++q) {
      long long k = pp * q + 1;  // det 1: p q' = p' q + 1
      for (long long d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        int npair = d * d == k ? 1 : 2;
        long long pair[2] = {d, k / d};
        for (int i = 0; i < npair; ++i) {
          long long p = pair[i], qq = k / p;
          Mat2Z m{Int(static_cast<long>(pp)), Int(static_cast<long>(-p)),
                  Int(static_cast<long>(qq)), Int(static_cast<long>(-q))};
          if (membership(m, alpha, beta, bound).s_b) hist[pp - q] += 1;
        }
      }
    }
  }
  for (long i = 1; i <= n_max; ++i) hist[i] += hist[i - 1];
  return hist;
}

std::vector<Int> s_pm_histogram_bruteforce(const Rat& alpha, const Rat& beta, long n_max,
                                           int sign) {
  if (sign != 1 && sign != -1) fail(Errc::invalid_query, "sign must be +1 or -1");
  require_ge1(alpha, "alpha");
  require_ge1(beta, "beta");
  if (n_max < 0) fail(Errc::invalid_query, "size bound must be nonnegative");
  std::vector<Int> hist(n_max + 1, Int(0));
  long long umax = sign > 0 ? n_max - 1 : upper_p_bound(alpha, beta, n_max);
  Int bound(n_max);

  for (long long u = 2; u <= umax; ++u) {
    for (long long v = 1; v < u; ++v) {
      long long tr = u + sign * v;
      if (tr > n_max) {
        if (sign > 0) break;
        continue;
      }
      long long k = u * v - sign;  // p q' = u v -+ 1
      for (long long d = 1; d * d <= k; ++d) {
        if (k % d != 0) continue;
        int npair = d * d == k ? 1 : 2;
        long long pair[2] = {d, k / d};
        for (int i = 0; i < npair; ++i) {
          long long p = pair[i], qq = k / p;
          Mat2Z m{Int(static_cast<long>(u)), Int(static_cast<long>(sign * p)),
                  Int(static_cast<long>(qq)), Int(static_cast<long>(sign * v))};
          SetMembership sm = membership(m, alpha, beta, bound);
          if (sign > 0 ? sm.s_plus : sm.s_minus) hist[tr] += 1;
        }
      }
    }
  }
  for (long i = 1; i <= n_max; ++i) hist[i] += hist[i - 1];
  return hist;
}

std::vector<Int> reduced_word_tally_reference(const CensusQuery& q,
                                              std::vector<QuadraticIrrational>* values) {
  bool bcf = q.kind == CensusKind::b_kind;
  if (q.radius_bound <= 1) fail(Errc::invalid_query, "radius bound must exceed 1");
  require_ge1(q.alpha, "alpha");
  if (q.beta1_infinite) {
    if (bcf) fail(Errc::invalid_query, "infinite beta is an e-kind configuration");
  } else {
    require_ge1(q.beta1, "beta1");
  }
  if (!bcf) require_ge1(q.beta2, "beta2");

  // r <= M is the trace window Tr <= floor(M + 1/M)
  Int tmax = rat_floor(q.radius_bound + Rat(1) / q.radius_bound);
  if (tmax > 2'000) fail(Errc::oracle_bound_exceeded, "reference enumeration is for small bounds");

  std::vector<Int> tally;
  CfWord w;
  w.kind = bcf ? CfKind::bcf : CfKind::ecf;

  auto visit = [&](const Mat2Z& m) {
    if (word_det_sign(w) != 1) return;
    Int tr = m.trace();
    if (tr < 3 || tr > tmax) return;
    QuadraticIrrational omega = word_value(w);
    if (omega.compare(q.alpha) < 0) return;
    QuadraticIrrational conj = omega.conjugate();
    if (q.beta1_infinite) {
      if (conj.compare(Rat(0)) > 0) return;
    } else if (q.beta1 > 1 && conj.compare(Rat(1) / q.beta1) > 0) {
      return;
    }
    if (!bcf && conj.compare(Rat(-1) / q.beta2) < 0) return;

    CfWord block = primitive_block(w);
    std::size_t j = w.digits.size() / block.digits.size();
    std::size_t reps = word_det_sign(block) == 1 ? j : j / 2;
    if (tally.size() < reps) tally.resize(reps, Int(0));
    tally[reps - 1] += 1;
    if (reps == 1 && values != nullptr) values->push_back(omega);
  };

  // plain depth-first enumeration; the only pruning is the nondecreasing
  // bound p_k - q_{k-1} <= tmax and a depth cap on the parabolic spine
  auto rec = [&](auto&& self, const Mat2Z& m) -> void {
    for (Int a = 2;; a += bcf ? 1 : 2) {
      bool grew = false;
      for (int e : bcf ? std::vector<int>{-1} : std::vector<int>{-1, +1}) {
        Mat2Z child = m * digit_matrix(Digit{a, e});
        if (child.a - m.c > tmax) continue;  // x bound; same for both signs
        grew = true;
        if (child.a - child.c == 1 && Int(w.digits.size()) + 1 > tmax) continue;  // spine cap
        w.digits.push_back(Digit{a, e});
        visit(child);
        self(self, child);
        w.digits.pop_back();
      }
      if (!grew) break;
    }
  };
  rec(rec, Mat2Z::identity());
  if (tally.empty()) tally.resize(1, Int(0));
  return tally;
}

CfWord bcf_matrix_to_word(const Mat2Z& sigma) {
  CfWord w;
  w.kind = CfKind::bcf;
  Mat2Z cur = sigma;
  if (cur.det() != 1) fail(Errc::not_in_s, "matrix is not a backward word product");
  while (!cur.is_identity()) {
    // cone shape [[p',-p],[q',-q]] with p' > q' >= 1; peel a = ceil(p'/q')
    if (cur.c < 1 || cur.a <= cur.c) fail(Errc::not_in_s, "matrix is not a backward word product");
    Int a = -floor_div(-cur.a, cur.c);
    if (a < 2) fail(Errc::not_in_s, "matrix is not a backward word product");
    cur = digit_matrix(Digit{a, -1}).inverse_unimodular() * cur;
    w.digits.push_back(Digit{a, -1});
  }
  // reaching the identity proves sigma equals the product of the peeled digits
  if (w.digits.empty()) fail(Errc::not_in_s, "matrix is not a backward word product");
  return w;
}

}  // namespace ebcf
