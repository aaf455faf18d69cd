// ebcf -- exact census and verification tool for even and backward
// continued fractions.
//
// Subcommands:
//   expand       digit expansions, periods and geodesic lengths
//   classify     reduction flags and invariants of quadratic irrationals
//   census       reduced-value / matrix-cone counts vs. their main terms
//   verify       self-contained verification suites (pass/fail rows)
//   totient      totient summatory family at one or more cutoffs
//   kloosterman  congruence pair counts over regions vs. the area term
//   pell         fundamental units and their word decompositions
//
// Exit codes: 0 success, 1 a gated check or verification suite failed,
// 2 usage or domain error.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ebcf/census.hpp"
#include "ebcf/cf.hpp"
#include "ebcf/ints.hpp"
#include "ebcf/io.hpp"
#include "ebcf/kloosterman.hpp"
#include "ebcf/mat2z.hpp"
#include "ebcf/pell.hpp"
#include "ebcf/qi.hpp"
#include "ebcf/totient.hpp"
#include "ebcf/word_matrix.hpp"

namespace {

using namespace ebcf;

struct Common {
  std::string format = "csv";
  std::string out;
  int threads = 0;
  bool check = false;
  double tolerance = -1.0;  // < 0: use the subcommand default

  double tol_or(double dflt) const { return tolerance >= 0 ? tolerance : dflt; }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "write output to this path instead of stdout");
  sub->add_option("--threads", c.threads, "worker threads (0 = runtime default)");
  sub->add_flag("--check", c.check,
                "gate deviations against the tolerance; exit 1 on failure");
  sub->add_option("--tolerance", c.tolerance,
                  "tolerance for --check (default depends on the subcommand)")
      ->check(CLI::NonNegativeNumber);
}

void emit(const Table& t, const Common& c) { write_table(t, parse_format(c.format), c.out); }

// -(A,B,C,s): the negative of a quadratic irrational.
QuadraticIrrational negated(const QuadraticIrrational& x) {
  return {x.a(), -x.b(), x.c(), flip(x.root_sign())};
}

Int next_prime_above(long n) {
  Int p;
  mpz_nextprime(p.get_mpz_t(), Int(n).get_mpz_t());
  return p;
}

// ---------------------------------------------------------------- expand --

struct ExpandOpts {
  std::vector<std::string> inputs;
  std::string kind;
};

int cmd_expand(const ExpandOpts& o, const Common& c) {
  CfKind kind = CfKind::ecf;
  if (!o.kind.empty()) kind = parse_kind(o.kind);
  std::vector<std::string> specs;
  for (const std::string& tok : o.inputs) {
    if (tok == "ecf" || tok == "bcf" || tok == "rcf") {
      kind = parse_kind(tok);  // trailing kind token, e.g. "1,-1,-1,+ ecf"
    } else {
      specs.push_back(tok);
    }
  }
  if (specs.empty()) fail(Errc::parse_error, "no quadratic irrational given");

  Table t{"expand",
          {"input", "kind", "value", "conjugate", "discriminant", "preperiod", "period",
           "period_len", "eper", "delta", "e_reduced", "b_reduced", "purely_periodic", "rho",
           "rho_squared"},
          {}};
  for (const std::string& s : specs) {
    QuadraticIrrational u = parse_qi(s);
    Classification cl = classify(u);
    Expansion ex = expand(u, kind);
    PeriodInfo pi = period_info(ex.period);
    bool purely = ex.preperiod.empty();
    Cell rho = std::monostate{};
    Cell rho2 = std::monostate{};
    if (purely) {
      RhoLength rl = rho_length(u, kind);
      rho = rl.rho;
      rho2 = rl.rho_squared;
    }
    Cell pre = purely ? Cell{std::string()} : Cell{word_str(ex.preperiod)};
    t.rows.push_back({s, std::string(kind_name(kind)), u.to_double(), u.conjugate().str(),
                      u.discriminant(), pre, word_str(ex.period),
                      static_cast<long>(ex.period.size()), static_cast<long>(pi.eper),
                      static_cast<long>(pi.delta), cl.e_reduced, cl.b_reduced, purely, rho,
                      rho2});
  }
  emit(t, c);
  return 0;
}

// -------------------------------------------------------------- classify --

int cmd_classify(const std::vector<std::string>& inputs, const Common& c) {
  Table t{"classify",
          {"input", "value", "conjugate_value", "conjugate", "discriminant", "floor",
           "e_reduced", "b_reduced", "rcf_reduced"},
          {}};
  for (const std::string& s : inputs) {
    QuadraticIrrational u = parse_qi(s);
    Classification cl = classify(u);
    t.rows.push_back({s, u.to_double(), u.conjugate().to_double(), u.conjugate().str(),
                      u.discriminant(), u.floor(), cl.e_reduced, cl.b_reduced, cl.rcf_reduced});
  }
  emit(t, c);
  return 0;
}

// ---------------------------------------------------------------- census --

struct CensusOpts {
  std::string kind = "E";
  std::string alpha = "1";
  std::string beta1;  // --beta1 / --beta (alias); default 1
  std::string beta;
  std::string beta2 = "1";
  std::string methods = "congruence";
  long long n = 0;
};

int cmd_census(const CensusOpts& o, const Common& c) {
  bool is_b;
  if (o.kind == "E" || o.kind == "e") {
    is_b = false;
  } else if (o.kind == "B" || o.kind == "b") {
    is_b = true;
  } else {
    fail(Errc::parse_error, "--kind must be E or B");
  }
  if (!o.beta.empty() && !o.beta1.empty())
    fail(Errc::parse_error, "--beta is an alias of --beta1; give only one");
  std::string b1s = !o.beta.empty() ? o.beta : (!o.beta1.empty() ? o.beta1 : "1");
  bool b1_inf = (b1s == "inf" || b1s == "oo" || b1s == "infinity");
  if (b1_inf && is_b) fail(Errc::invalid_query, "beta1 = inf is only defined for kind E");
  Rat alpha = parse_rat(o.alpha);
  Rat beta1 = b1_inf ? Rat(1) : parse_rat(b1s);
  Rat beta2 = parse_rat(o.beta2);
  if (o.n < 1) fail(Errc::invalid_query, "--N must be a positive integer");
  Int n(static_cast<long>(o.n));

  bool want_cong = o.methods == "congruence" || o.methods == "both";
  bool want_dfs = o.methods == "dfs" || o.methods == "both";
  if (!want_cong && !want_dfs)
    fail(Errc::parse_error, "--methods must be congruence, dfs or both");

  double tol = c.tol_or(10.0 / std::sqrt(static_cast<double>(o.n)));
  Table t{"census",
          {"kind", "alpha", "beta1", "beta2", "N", "method", "exact_count", "main_term",
           "relative_deviation"},
          {}};
  if (c.check) {
    t.columns.push_back("tolerance");
    t.columns.push_back("pass");
  }
  bool all_pass = true;
  auto add_row = [&](const char* method, const CensusResult& r) {
    std::vector<Cell> row{std::string(is_b ? "B" : "E"),
                          alpha,
                          b1_inf ? Cell{std::string("inf")} : Cell{beta1},
                          is_b ? Cell{std::monostate{}} : Cell{beta2},
                          static_cast<long>(o.n),
                          std::string(method),
                          r.exact_count,
                          r.main_term,
                          r.relative_deviation};
    if (c.check) {
      bool pass = std::fabs(r.relative_deviation) <= tol;  // false on NaN
      all_pass = all_pass && pass;
      row.push_back(tol);
      row.push_back(pass);
    }
    t.rows.push_back(std::move(row));
  };

  if (want_cong) {
    CensusResult r = is_b ? count_s_b_congruence(alpha, beta1, n, c.threads)
                          : two_method_census(alpha, beta1, b1_inf, beta2, n, c.threads);
    add_row("congruence", r);
  }
  if (want_dfs) {
    CensusQuery q;
    q.kind = is_b ? CensusKind::b_kind : CensusKind::e_kind;
    q.alpha = alpha;
    q.beta1 = beta1;
    q.beta2 = beta2;
    q.beta1_infinite = b1_inf;
    q.radius_bound = Rat(static_cast<long>(o.n));
    add_row("dfs", count_reduced_word_dfs(q, c.threads));
  }
  emit(t, c);
  return (c.check && !all_pass) ? 1 : 0;
}

// --------------------------------------------------------------- totient --

struct TotientOpts {
  std::vector<unsigned long long> ns{1000000ULL};
};

int cmd_totient(const TotientOpts& o, const Common& c) {
  Table t{"totient",
          {"n", "phi_sum", "phi_sum_odd", "phi_sum_even", "s1", "s1_odd", "s1_even", "s2",
           "s2_odd", "s2_even", "s2t_odd", "s2t_even", "main_term", "relative_deviation"},
          {}};
  if (c.check) {
    t.columns.push_back("tolerance");
    t.columns.push_back("pass");
  }
  bool all_pass = true;
  const double three_over_pi2 = 3.0 / (M_PI * M_PI);
  for (unsigned long long n : o.ns) {
    TotientSums s = totient_sums(n, c.threads);
    double main = three_over_pi2 * static_cast<double>(n) * static_cast<double>(n);
    double dev = (s.s0.get_d() - main) / main;
    std::vector<Cell> row{static_cast<long>(n),    s.s0,
                          s.s0_odd,                s.s0_even,
                          s.s1.to_double(),        s.s1_odd.to_double(),
                          s.s1_even.to_double(),   s.s2.to_double(),
                          s.s2_odd.to_double(),    s.s2_even.to_double(),
                          s.s2t_odd.to_double(),   s.s2t_even.to_double(),
                          main,                    dev};
    if (c.check) {
      double tol = c.tol_or(10.0 / std::sqrt(static_cast<double>(n)));
      bool pass = std::fabs(dev) <= tol;
      all_pass = all_pass && pass;
      row.push_back(tol);
      row.push_back(pass);
    }
    t.rows.push_back(std::move(row));
  }
  emit(t, c);
  return (c.check && !all_pass) ? 1 : 0;
}

// ----------------------------------------------------------- kloosterman --

struct KloostermanOpts {
  long long q = 0;
  long long h = 1;
  std::string x0, x1, y0, y1;  // rationals; empty = full period [0,q)
};

int cmd_kloosterman(const KloostermanOpts& o, const Common& c) {
  if (o.q < 1) fail(Errc::invalid_query, "--q must be a positive integer");
  Int q(static_cast<long>(o.q));
  Rat x0 = o.x0.empty() ? Rat(0) : parse_rat(o.x0);
  Rat x1 = o.x1.empty() ? Rat(q) : parse_rat(o.x1);
  Rat y0 = o.y0.empty() ? Rat(0) : parse_rat(o.y0);
  Rat y1 = o.y1.empty() ? Rat(q) : parse_rat(o.y1);
  Region region = Region::rect(x0, x1, y0, y1);
  Deviation d = main_term_deviation(q, Int(static_cast<long>(o.h)), region);

  double tol = c.tol_or(10.0);
  Table t{"kloosterman",
          {"q", "h", "x0", "x1", "y0", "y1", "count", "main_term", "normalized_error"},
          {}};
  std::vector<Cell> row{static_cast<long>(o.q), static_cast<long>(o.h), x0, x1, y0, y1,
                        d.count,                d.main,                 d.normalized_error};
  bool pass = std::fabs(d.normalized_error) <= tol;
  if (c.check) {
    t.columns.push_back("tolerance");
    t.columns.push_back("pass");
    row.push_back(tol);
    row.push_back(pass);
  }
  t.rows.push_back(std::move(row));
  emit(t, c);
  return (c.check && !pass) ? 1 : 0;
}

// ------------------------------------------------------------------ pell --

struct PellOpts {
  std::vector<long long> discs;
  long long ymax = 100000;
};

int cmd_pell(const PellOpts& o, const Common& c) {
  Table t{"pell",
          {"disc", "x", "y", "norm", "value", "plus_x", "plus_y", "plus_value"},
          {}};
  if (c.check) t.columns.push_back("brute_ok");
  bool all_pass = true;
  for (long long dll : o.discs) {
    Int d(static_cast<long>(dll));
    PellUnit fund = pell_fundamental(d);
    PellUnit plus = pell_fundamental_plus(d);
    std::vector<Cell> row{d,      fund.x, fund.y,       static_cast<long>(fund.norm),
                          unit_to_double(fund), plus.x, plus.y, unit_to_double(plus)};
    if (c.check) {
      PellUnit brute = pell_brute(d, Int(static_cast<long>(o.ymax)), 0);
      bool ok = brute == fund;
      all_pass = all_pass && ok;
      row.push_back(ok);
    }
    t.rows.push_back(std::move(row));
  }
  emit(t, c);
  return (c.check && !all_pass) ? 1 : 0;
}

// ---------------------------------------------------------------- verify --

struct VerifyOpts {
  std::string suite;
  long long limit = 0;      // pell disc bound / bijection entry bound / kloosterman anchor cap
  long long len = 5;        // galois: maximum word length
  long long max_digit = 8;  // galois: maximum digit value
  unsigned long long n = 100000;  // totient cutoff
  std::string theta = "2";        // totient theta
};

std::pair<Table, bool> verify_totient(const VerifyOpts& o, const Common& c) {
  Table t{"verify",
          {"suite", "name", "exact", "predicted", "abs_error", "normalized_error", "pass",
           "gated"},
          {}};
  bool all = true;
  for (const VerifyRow& r : totient_verify(o.n, parse_rat(o.theta), c.threads)) {
    t.rows.push_back({std::string("totient"), r.name, r.exact, r.predicted, r.abs_error,
                      r.normalized_error, r.pass, r.gated});
    all = all && (r.pass || r.gated);
  }
  return {std::move(t), all};
}

std::pair<Table, bool> verify_kloosterman(const VerifyOpts& o, const Common& c) {
  long cap = o.limit > 0 ? static_cast<long>(o.limit) : 100000;
  double tol = c.tol_or(10.0);
  Table t{"verify",
          {"suite", "q", "h", "region", "count", "main_term", "normalized_error", "pass"},
          {}};
  bool all = true;
  for (long anchor : {1000L, 3162L, 10000L, 31622L, 100000L}) {
    if (anchor > cap) continue;
    Int q = next_prime_above(anchor);
    Rat qr(q);
    struct Named {
      const char* name;
      Region region;
    };
    std::vector<Named> regions{
        {"full_period", Region::rect(Rat(0), qr, Rat(0), qr)},
        {"half_by_third", Region::rect(Rat(0), qr / 2, Rat(0), qr / 3)},
        {"shifted_box", Region::rect(qr / 7, qr / 2, qr / 5, qr)},
        {"under_diag", Region::under_line(Rat(0), qr, Int(0), +1)},
        {"under_antidiag", Region::under_line(Rat(0), qr, q, -1)},
    };
    for (long h : {1L, -1L}) {
      for (const Named& nr : regions) {
        Deviation d = main_term_deviation(q, Int(h), nr.region);
        bool pass = std::fabs(d.normalized_error) <= tol;
        all = all && pass;
        t.rows.push_back({std::string("kloosterman"), Int(q), h, std::string(nr.name), d.count,
                          d.main, d.normalized_error, pass});
      }
    }
  }
  return {std::move(t), all};
}

std::pair<Table, bool> verify_pell(const VerifyOpts& o, const Common&) {
  long limit = o.limit > 0 ? static_cast<long>(o.limit) : 500;
  Table t{"verify",
          {"suite", "disc", "candidates", "unit_ok", "stab_ok", "pass"},
          {}};
  bool all = true;
  for (long d = 5; d <= limit; d += 4) {  // discriminants 1 mod 4
    Int disc(d);
    Int root = isqrt(disc);
    if (root * root == disc) continue;
    std::vector<QuadraticIrrational> values = enumerate_reduced_by_disc(disc, CensusKind::e_kind);
    // Generator of the norm-one integer-form units t + u*sqrt(disc): the
    // first power of the fundamental order unit with even coordinates and
    // norm +1 (power 1, 2, 3 or 6).
    PellUnit base = pell_fundamental(disc);
    PellUnit gen = base;
    for (int k = 1; !(gen.norm == 1 && gen.x % 2 == 0 && gen.y % 2 == 0); ++k) {
      if (k > 12) fail(Errc::out_of_domain, "no integer-form unit among small powers");
      gen = unit_mul(gen, base);
    }
    long candidates = 0, unit_ok = 0, stab_ok = 0;
    for (const QuadraticIrrational& w : values) {
      Expansion ex = expand(w, CfKind::ecf);
      if (!ex.preperiod.empty()) continue;  // reduced values are purely periodic
      PeriodInfo pi = period_info(ex.period);
      if (pi.per % 2 != 0 || pi.eper != pi.per) continue;
      ++candidates;
      PellUnit eps = unit_from_word(ex.period);
      if (eps == gen) ++unit_ok;
      Mat2Z stab = stabilizer_from_unit(w, eps);
      bool theta_ok = (stab.a % 2 != 0 && stab.d % 2 != 0 && stab.b % 2 == 0 &&
                       stab.c % 2 == 0) ||
                      (stab.a % 2 == 0 && stab.d % 2 == 0 && stab.b % 2 != 0 &&
                       stab.c % 2 != 0);
      if (stab.det() == 1 && stab.trace() == eps.x && theta_ok) ++stab_ok;
    }
    if (candidates == 0) continue;
    bool pass = unit_ok == candidates && stab_ok == candidates;
    all = all && pass;
    t.rows.push_back(
        {std::string("pell"), disc, candidates, unit_ok, stab_ok, pass});
  }
  return {std::move(t), all};
}

std::pair<Table, bool> verify_galois(const VerifyOpts& o, const Common&) {
  if (o.max_digit < 2 || o.max_digit % 2 != 0)
    fail(Errc::invalid_query, "--max-digit must be an even integer >= 2");
  if (o.len < 1) fail(Errc::invalid_query, "--len must be >= 1");
  std::vector<Digit> alphabet;
  for (long a = 2; a <= o.max_digit; a += 2)
    for (int e : {-1, +1}) alphabet.push_back(Digit{Int(a), e});

  Table t{"verify", {"suite", "length", "words", "checked", "failures", "pass"}, {}};
  bool all = true;
  for (long len = 1; len <= o.len; ++len) {
    long words = 0, checked = 0, failures = 0;
    std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
    while (true) {
      CfWord w;
      w.kind = CfKind::ecf;
      for (std::size_t i = 0; i < idx.size(); ++i) w.digits.push_back(alphabet[idx[i]]);
      ++words;
      if (!is_degenerate_period(w)) {
        ++checked;
        // The dual value (reversed dual product) must equal -conj(value(w)).
        QuadraticIrrational expect = negated(word_value(w).conjugate());
        if (!(galois_dual(w) == expect)) ++failures;
      }
      std::size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == alphabet.size()) {
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
    bool pass = failures == 0;
    all = all && pass;
    t.rows.push_back({std::string("galois"), len, words, checked, failures, pass});
  }
  return {std::move(t), all};
}

std::pair<Table, bool> verify_bijection(const VerifyOpts& o, const Common&) {
  long lim = o.limit > 0 ? static_cast<long>(o.limit) : 120;
  Int trace_bound(4 * lim);

  // Direction 1: cone-shaped unimodular matrices <-> digit words.  Candidate
  // matrices [[p', ep],[q', eq]] with p' > p > q >= 1, p' > q' > q and all
  // entries <= lim are generated from the determinant relation
  // p'q - pq' = e*det; membership must coincide exactly with a successful
  // decomposition that reproduces the matrix.
  long checked_m = 0, fail_m = 0;
  for (long q = 1; q <= lim; ++q) {
    for (long p = q + 1; p <= lim; ++p) {
      for (long q2 = q + 1; q2 <= lim; ++q2) {
        for (int det : {+1, -1}) {
          for (int e : {+1, -1}) {
            long num = p * q2 + e * det;
            if (num % q != 0) continue;
            long p2 = num / q;
            if (p2 <= p || p2 <= q2 || p2 > lim) continue;
            Mat2Z m{Int(p2), Int(e * p), Int(q2), Int(e * q)};
            ++checked_m;
            bool member = membership(m, Rat(1), Rat(1), trace_bound).s;
            bool roundtrip = false;
            try {
              roundtrip = word_to_matrix(matrix_to_word(m)) == m;
            } catch (const Error&) {
            }
            if (member != roundtrip) ++fail_m;
          }
        }
      }
    }
  }

  // Direction 2: every digit word whose matrix entries stay <= lim must land
  // in the set (length >= 2) and decompose back to itself.
  long checked_w = 0, fail_w = 0;
  CfWord w;
  w.kind = CfKind::ecf;
  std::function<void(const Mat2Z&)> rec = [&](const Mat2Z& m) {
    if (!w.empty()) {
      ++checked_w;
      bool ok = w.size() < 2 || membership(m, Rat(1), Rat(1), trace_bound).s;
      if (ok) {
        try {
          ok = matrix_to_word(m) == w;
        } catch (const Error&) {
          ok = false;
        }
      }
      if (!ok) ++fail_w;
    }
    for (long a = 2;; a += 2) {
      Int next_p2 = m.a * a + m.b;
      if (next_p2 > lim) break;
      for (int e : {+1, -1}) {
        Digit d{Int(a), e};
        w.digits.push_back(d);
        rec(m * digit_matrix(d));
        w.digits.pop_back();
      }
    }
  };
  rec(Mat2Z::identity());

  Table t{"verify", {"suite", "direction", "checked", "failures", "pass"}, {}};
  bool pass_m = fail_m == 0, pass_w = fail_w == 0;
  t.rows.push_back(
      {std::string("bijection"), std::string("matrix_to_word"), checked_m, fail_m, pass_m});
  t.rows.push_back(
      {std::string("bijection"), std::string("word_to_matrix"), checked_w, fail_w, pass_w});
  return {std::move(t), pass_m && pass_w};
}

int cmd_verify(const VerifyOpts& o, const Common& c) {
  std::pair<Table, bool> r;
  if (o.suite == "totient") {
    r = verify_totient(o, c);
  } else if (o.suite == "kloosterman") {
    r = verify_kloosterman(o, c);
  } else if (o.suite == "pell") {
    r = verify_pell(o, c);
  } else if (o.suite == "galois") {
    r = verify_galois(o, c);
  } else if (o.suite == "bijection") {
    r = verify_bijection(o, c);
  } else {
    fail(Errc::parse_error,
         "unknown suite (expected totient, kloosterman, pell, galois or bijection)");
  }
  emit(r.first, c);
  return r.second ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact continued-fraction census tool (even and backward expansions)"};
  app.require_subcommand(1);

  ExpandOpts eo;
  Common ec;
  CLI::App* expand_cmd = app.add_subcommand(
      "expand", "expand quadratic irrationals into periodic digit words");
  expand_cmd->add_option("inputs", eo.inputs, "\"A,B,C,+\" values, optionally followed by a kind")
      ->required()
      ->expected(-1);
  expand_cmd->add_option("--kind", eo.kind, "expansion kind: ecf, bcf or rcf");
  add_common(expand_cmd, ec);

  std::vector<std::string> cl_inputs;
  Common cc;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "reduction flags and invariants of values");
  classify_cmd->add_option("inputs", cl_inputs, "\"A,B,C,+\" values")->required()->expected(-1);
  add_common(classify_cmd, cc);

  CensusOpts so;
  Common sc;
  CLI::App* census_cmd =
      app.add_subcommand("census", "count reduced values / cone matrices up to a bound");
  census_cmd->add_option("--kind", so.kind, "E (even) or B (backward)");
  census_cmd->add_option("--alpha", so.alpha, "value window w >= alpha (rational, >= 1)");
  census_cmd->add_option("--beta1", so.beta1,
                         "conjugate window w* <= 1/beta1 (rational >= 1, or inf)");
  census_cmd->add_option("--beta", so.beta, "alias of --beta1");
  census_cmd->add_option("--beta2", so.beta2, "conjugate window w* >= -1/beta2 (kind E only)");
  census_cmd->add_option("--N", so.n, "size bound (trace / spectral radius)")->required();
  census_cmd->add_option("--methods", so.methods, "congruence, dfs or both")
      ->check(CLI::IsMember({"congruence", "dfs", "both"}));
  add_common(census_cmd, sc);

  VerifyOpts vo;
  Common vc;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "run a verification suite: totient, kloosterman, pell, galois, bijection");
  verify_cmd->add_option("suite", vo.suite, "suite name")->required();
  verify_cmd->add_option("--limit", vo.limit,
                         "scale bound (pell disc / bijection entries / kloosterman moduli)");
  verify_cmd->add_option("--len", vo.len, "galois: maximum word length");
  verify_cmd->add_option("--max-digit", vo.max_digit, "galois: maximum digit value");
  verify_cmd->add_option("--N", vo.n, "totient: summatory cutoff");
  verify_cmd->add_option("--theta", vo.theta, "totient: theta parameter (rational)");
  add_common(verify_cmd, vc);

  TotientOpts to;
  Common tc;
  CLI::App* totient_cmd =
      app.add_subcommand("totient", "totient summatory family at one or more cutoffs");
  totient_cmd->add_option("--N", to.ns, "cutoff(s); repeatable");
  add_common(totient_cmd, tc);

  KloostermanOpts ko;
  Common kc;
  CLI::App* kloosterman_cmd = app.add_subcommand(
      "kloosterman", "count x*y = h (mod q) pairs in a box vs. the area main term");
  kloosterman_cmd->add_option("--q", ko.q, "modulus (positive integer)")->required();
  kloosterman_cmd->add_option("--residue", ko.h, "residue h with gcd(h, q) = 1 (default 1)");
  kloosterman_cmd->add_option("--x0", ko.x0, "box x lower bound (rational; default 0)");
  kloosterman_cmd->add_option("--x1", ko.x1, "box x upper bound (rational; default q)");
  kloosterman_cmd->add_option("--y0", ko.y0, "box y lower bound (rational; default 0)");
  kloosterman_cmd->add_option("--y1", ko.y1, "box y upper bound (rational; default q)");
  add_common(kloosterman_cmd, kc);

  PellOpts po;
  Common pc;
  CLI::App* pell_cmd =
      app.add_subcommand("pell", "fundamental units of real quadratic discriminants");
  pell_cmd->add_option("--disc", po.discs, "discriminant(s), 0 or 1 mod 4; repeatable")
      ->required();
  pell_cmd->add_option("--ymax", po.ymax,
                       "--check: brute-force search bound on y (default 100000)");
  add_common(pell_cmd, pc);

  int rc = 0;
  expand_cmd->callback([&] { rc = cmd_expand(eo, ec); });
  classify_cmd->callback([&] { rc = cmd_classify(cl_inputs, cc); });
  census_cmd->callback([&] { rc = cmd_census(so, sc); });
  verify_cmd->callback([&] { rc = cmd_verify(vo, vc); });
  totient_cmd->callback([&] { rc = cmd_totient(to, tc); });
  kloosterman_cmd->callback([&] { rc = cmd_kloosterman(ko, kc); });
  pell_cmd->callback([&] { rc = cmd_pell(po, pc); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ebcf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
