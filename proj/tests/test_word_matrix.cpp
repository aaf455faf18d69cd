#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ebcf/word_matrix.hpp"

using namespace ebcf;

namespace {

template <class F>
Errc thrown_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code;
  }
  FAIL("expected ebcf::Error");
  return Errc::out_of_domain;
}

std::vector<CfWord> ecf_words_up_to(std::size_t len, long max_digit) {
  std::vector<CfWord> out, frontier{CfWord{CfKind::ecf, {}}};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<CfWord> next;
    for (const CfWord& w : frontier)
      for (long a = 2; a <= max_digit; a += 2)
        for (int e : {-1, +1}) {
          CfWord v = w;
          v.digits.push_back({Int(a), e});
          next.push_back(v);
          out.push_back(v);
        }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("matrix_to_word on the worked matrices") {
  CHECK(matrix_to_word(Mat2Z{4, -1, 1, 0}) == ecf_word({{4, -1}}));
  CHECK(matrix_to_word(Mat2Z{3, 2, 2, 1}) == ecf_word({{2, -1}, {2, +1}}));
  CHECK(matrix_to_word(Mat2Z{13, 8, 8, 5}) ==
        ecf_word({{2, -1}, {2, +1}, {2, -1}, {2, +1}}));
}

TEST_CASE("matrix_to_word rejects matrices outside the cone") {
  CHECK(thrown_code([] { matrix_to_word(Mat2Z{2, 0, 0, 1}); }) == Errc::not_in_s);   // det 2
  CHECK(thrown_code([] { matrix_to_word(Mat2Z{3, 1, 1, 0}); }) == Errc::not_in_s);   // odd digit
  CHECK(thrown_code([] { matrix_to_word(Mat2Z{1, 0, 0, 1}); }) == Errc::not_in_s);   // empty word
  CHECK(thrown_code([] { matrix_to_word(Mat2Z{7, 5, 4, 3}); }) == Errc::not_in_s);   // mod 2 wrong
  CHECK(thrown_code([] { matrix_to_word(Mat2Z{13, 8, 8, -5}); }) == Errc::not_in_s); // sign clash
}

TEST_CASE("word -> matrix -> word round trip on a digit grid") {
  for (const CfWord& w : ecf_words_up_to(5, 8)) {
    Mat2Z m = word_to_matrix(w);
    CHECK(matrix_to_word(m) == w);
    // every product of >= 2 digit matrices lands in the s cone
    if (w.size() >= 2) {
      SetMembership f = membership(m, Rat(1), Rat(1), m.trace());
      CHECK(f.s);
      CHECK(f.theta_tilde);
    }
  }
}

TEST_CASE("membership flags on the worked matrices") {
  SetMembership a = membership(Mat2Z{3, 2, 2, 1}, Rat(1), Rat(1), Int(4));
  CHECK(a.s);
  CHECK(a.theta_tilde);
  CHECK_FALSE(a.theta);    // det -1
  CHECK_FALSE(a.s_plus);
  CHECK_FALSE(a.s_minus);
  CHECK_FALSE(a.s_b);

  SetMembership b = membership(Mat2Z{13, 8, 8, 5}, Rat(1), Rat(1), Int(18));
  CHECK(b.s);
  CHECK(b.s_plus);
  CHECK(b.theta);
  CHECK_FALSE(b.s_minus);
  // trace window is sharp: Tr = 18
  CHECK_FALSE(membership(Mat2Z{13, 8, 8, 5}, Rat(1), Rat(1), Int(17)).s_plus);
  // alpha window: p = 8 >= alpha q = 2*5 fails
  CHECK_FALSE(membership(Mat2Z{13, 8, 8, 5}, Rat(2), Rat(1), Int(18)).s_plus);
  // beta window: p' = 13 >= beta p = 8*2 fails
  CHECK_FALSE(membership(Mat2Z{13, 8, 8, 5}, Rat(1), Rat(2), Int(18)).s_plus);

  SetMembership c = membership(Mat2Z{17, -3, 6, -1}, Rat(1), Rat(1), Int(16));
  CHECK(c.s_b);
  CHECK_FALSE(c.s);            // mod 2 is neither I2 nor J2
  CHECK_FALSE(c.theta_tilde);
  CHECK_FALSE(membership(Mat2Z{17, -3, 6, -1}, Rat(1), Rat(1), Int(15)).s_b);

  // e = -1 member: M(2,-1)M(4,-1) = [[7,-2],[4,-1]], trace p' + eq = 6
  Mat2Z m = word_to_matrix(ecf_word({{2, -1}, {4, -1}}));
  CHECK(m == Mat2Z{7, -2, 4, -1});
  SetMembership d = membership(m, Rat(1), Rat(1), Int(6));
  CHECK(d.s_minus);
  CHECK(d.s);
  CHECK(d.theta);
  CHECK_FALSE(d.s_plus);
  // the same matrix also fits the s_b shape (bcf words need not be even)
  CHECK(d.s_b);
  SetMembership dtight = membership(m, Rat(1), Rat(1), Int(5));
  CHECK_FALSE(dtight.s_minus);
  CHECK_FALSE(dtight.s_b);
}

TEST_CASE("word_orbit_pair splits words into value and repetition count") {
  OrbitPair one = word_orbit_pair(ecf_word({{4, -1}}));
  CHECK(one.value == QuadraticIrrational(1, -4, 1, RootSign::plus));
  CHECK(one.reps == 1);

  OrbitPair two = word_orbit_pair(ecf_word({{4, -1}, {4, -1}}));
  CHECK(two.value == QuadraticIrrational(1, -4, 1, RootSign::plus));
  CHECK(two.reps == 2);

  // golden word has delta -1, so only its even powers are plus words
  CfWord g2 = ecf_word({{2, -1}, {2, +1}, {2, -1}, {2, +1}});
  OrbitPair gp = word_orbit_pair(g2);
  CHECK(gp.value == QuadraticIrrational(1, -1, -1, RootSign::plus));
  CHECK(gp.reps == 1);
  CHECK(thrown_code([] { word_orbit_pair(ecf_word({{2, -1}, {2, +1}})); }) == Errc::not_plus_word);

  // the defining identity: matrix(w) = OmegaTilde(period)^reps
  for (const CfWord& w : ecf_words_up_to(4, 6)) {
    if (word_det_sign(w) != 1 || is_degenerate_period(w)) continue;
    OrbitPair p = word_orbit_pair(w);
    CfWord period = expand(p.value, CfKind::ecf).period;
    CHECK(word_to_matrix(w) == omega_tilde(period).pow(p.reps));
  }
}

TEST_CASE("census triple bijection") {
  CensusTriple t = census_triple(Mat2Z{13, 8, 8, 5});
  CHECK(t.m == 8);
  CHECK(t.u == 13);
  CHECK(t.v == 5);
  CHECK(t.branch == 2);
  CHECK(census_triple_inverse(t) == Mat2Z{13, 8, 8, 5});

  // odd-m branch: (2,-1),(2,+1),(2,+1) has det +1 and m = p_{n-1} = 3 odd
  Mat2Z modd = word_to_matrix(ecf_word({{2, -1}, {2, +1}, {2, +1}}));
  CHECK(modd == Mat2Z{8, 3, 5, 2});
  CensusTriple t1 = census_triple(modd);
  CHECK(t1.m == 3);
  CHECK(t1.branch == 1);
  CHECK(census_triple_inverse(t1) == modd);

  CHECK(thrown_code([] { census_triple(Mat2Z{3, 2, 2, 1}); }) == Errc::not_in_s);  // det -1
  CHECK(thrown_code([] { census_triple_inverse(CensusTriple{Int(8), Int(12), Int(5), 2}); }) ==
        Errc::out_of_domain);  // uv != 1 mod m

  // exhaustive: round trips over the word grid, with parity branch laws
  for (const CfWord& w : ecf_words_up_to(5, 6)) {
    if (w.size() < 2) continue;
    Mat2Z m = word_to_matrix(w);
    if (m.det() != 1 || sgn(m.d) != 1) continue;
    CensusTriple tr = census_triple(m);
    CHECK((tr.u * tr.v - 1) % tr.m == 0);
    Int q2 = (tr.u * tr.v - 1) / tr.m;
    if (tr.branch == 1) {
      CHECK(mpz_even_p(tr.u.get_mpz_t()));
      CHECK(mpz_even_p(tr.v.get_mpz_t()));
      CHECK(mpz_odd_p(q2.get_mpz_t()));
    } else {
      CHECK((tr.u * tr.v - 1) % (2 * tr.m) == 0);
      CHECK(mpz_odd_p(tr.u.get_mpz_t()));
      CHECK(mpz_odd_p(tr.v.get_mpz_t()));
    }
    CHECK(census_triple_inverse(tr) == m);
  }
}

TEST_CASE("consecutive convergent detection against real expansions") {
  QuadraticIrrational h(2, -6, 1, RootSign::plus);  // (3+sqrt7)/2 = [[3,6]] bcf
  CHECK(is_consecutive_convergents(Mat2Z{3, -1, 1, 0}, h));
  CHECK(is_consecutive_convergents(Mat2Z{17, -3, 6, -1}, h));
  CHECK_FALSE(is_consecutive_convergents(Mat2Z{4, -1, 1, 0}, h));
  QuadraticIrrational g(1, -1, -1, RootSign::plus);
  CHECK_FALSE(is_consecutive_convergents(Mat2Z{17, -3, 6, -1}, g));

  // every consecutive pair of a real expansion tests true...
  std::vector<QuadraticIrrational> us = {h, QuadraticIrrational(1, -4, 1, RootSign::plus),
                                         QuadraticIrrational(1, 0, -13, RootSign::plus),
                                         QuadraticIrrational(3, -15, 11, RootSign::plus)};
  for (const auto& u : us) {
    Expansion ex = expand(u, CfKind::bcf);
    CfWord full = ex.preperiod;
    for (int rep = 0; rep < 3; ++rep)
      full.digits.insert(full.digits.end(), ex.period.digits.begin(), ex.period.digits.end());
    auto conv = convergents(full);
    std::vector<Mat2Z> pairs;
    for (std::size_t k = 1; k < conv.size(); ++k)
      pairs.push_back({conv[k].p, -conv[k - 1].p, conv[k].q, -conv[k - 1].q});
    for (const Mat2Z& sigma : pairs) CHECK(is_consecutive_convergents(sigma, u));
    // ...and any other small sl2 matrix of that shape tests false
    long bound = 40;
    for (long p2 = 2; p2 <= bound; ++p2)
      for (long q2 = 1; q2 < p2; ++q2)
        for (long q = 0; q < q2; ++q) {
          // det +1 forces p q2 - p2 q = ... solve p from det: p*q2 = 1 + p2*q
          if ((1 + p2 * q) % q2 != 0) continue;
          long p = (1 + p2 * q) / q2;
          Mat2Z sigma{Int(p2), Int(-p), Int(q2), Int(-q)};
          if (sigma.det() != 1) continue;
          bool expected = false;
          for (const Mat2Z& real : pairs) expected = expected || real == sigma;
          CHECK(is_consecutive_convergents(sigma, u) == expected);
        }
  }
}
