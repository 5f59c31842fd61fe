#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mm/reductions.hpp"
#include "mm/votes.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace mm;
using namespace testsupport;

namespace {

Instance threeHouses(int capA) {
  Builder b;
  b.house("h1", 1).house("h2", 1).house("h3", 1);
  return b.applicant("a", capA, {"h1", "h2", "h3"}).build();
}

}  // namespace

TEST_CASE("pairingVote examples") {
  const Instance I = threeHouses(2);
  CHECK(pairingVote(I, 0, {0}, {0}, {}) == 0);
  CHECK(pairingVote(I, 0, {}, {0}, {}) == -1);
  CHECK(pairingVote(I, 0, {0, 2}, {1}, {{0, 1}}) == 2);   // 1 - 0 + 2 - 1
  CHECK(pairingVote(I, 0, {0, 2}, {1}, {{2, 1}}) == 0);   // 0 - 1 + 2 - 1
  CHECK(throwsKind([&] { pairingVote(I, 0, {0, 2}, {1}, {}); }, ErrorKind::Contract));
  CHECK(throwsKind([&] { pairingVote(I, 0, {0, 2}, {1}, {{0, 0}}); }, ErrorKind::Contract));
}

TEST_CASE("pairingVote agrees with an independent formula") {
  const Instance I = threeHouses(3);
  const std::vector<std::vector<int>> sets = {{}, {0}, {1}, {2}, {0, 1}, {0, 2},
                                              {1, 2}, {0, 1, 2}};
  for (const auto& S : sets)
    for (const auto& T : sets) {
      std::vector<int> X, Y;
      for (int h : S)
        if (std::find(T.begin(), T.end(), h) == T.end()) X.push_back(h);
      for (int h : T)
        if (std::find(S.begin(), S.end(), h) == S.end()) Y.push_back(h);
      FeasiblePairing N;
      const size_t want = std::min(X.size(), Y.size());
      for (size_t k = 0; k < want; ++k) N.emplace_back(X[k], Y[k]);
      CHECK(pairingVote(I, 0, S, T, N) == independentPairingVote(I, 0, S, T, N));
    }
}

TEST_CASE("voteTraditional examples") {
  const Instance I = threeHouses(2);
  const Matching both = makeMatching(I, {{0, 0}, {0, 2}});
  const Matching mid = makeMatching(I, {{0, 1}});
  CHECK(voteTraditional(I, 0, both, both) == 0);
  CHECK(voteTraditional(I, 0, both, mid) == 0);  // pairings give 2 and 0; min is 0
  CHECK(voteTraditional(I, 0, Matching{}, makeMatching(I, {{0, 0}})) == -1);
}

TEST_CASE("voteLex examples") {
  const Instance I = threeHouses(2);
  CHECK(voteLex(I, 0, makeMatching(I, {{0, 0}}), makeMatching(I, {{0, 0}})) == 0);
  CHECK(voteLex(I, 0, makeMatching(I, {{0, 0}}), makeMatching(I, {{0, 1}})) == 1);
  CHECK(voteLex(I, 0, makeMatching(I, {{0, 1}, {0, 2}}), makeMatching(I, {{0, 0}})) == -1);
}

TEST_CASE("totalVote on the worked example") {
  const Instance I = ex42Instance(2);
  const Matching M = makeMatching(I, {{0, 0}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
  CHECK(totalVote(I, M, M, PopularityNotion::Traditional).total == 0);

  // a2 moves from h3 into h2's free slot: a strict improvement for her alone.
  const Matching M2 = makeMatching(I, {{0, 0}, {1, 1}, {2, 2}, {3, 2}, {4, 1}});
  const auto vote = totalVote(I, M, M2, PopularityNotion::Traditional);
  CHECK(vote.perApplicant[1] == -1);
  CHECK(vote.total == -1);

  Builder b;
  b.house("h1", 1).house("h2", 1);
  const Instance unit = b.applicant("a", 1, {"h1", "h2"}).build();
  CHECK(totalVote(unit, makeMatching(unit, {{0, 0}}), makeMatching(unit, {{0, 1}}),
                  PopularityNotion::Traditional)
            .total == 1);
}

TEST_CASE("isPopularBruteForce basics") {
  Builder b;
  b.house("h", 1);
  const Instance I = b.applicant("a", 1, {"h"}).build();
  CHECK(isPopularBruteForce(I, makeMatching(I, {{0, 0}}), PopularityNotion::Traditional, 100)
            .popular);
  const auto res = isPopularBruteForce(I, Matching{}, PopularityNotion::Traditional, 100);
  CHECK_FALSE(res.popular);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->edges == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("saturating one applicant with every house is popular") {
  // capacity-3 applicants over three unit houses, from the identical-triple
  // family; giving one applicant all three houses survives full enumeration
  ThreeDMInstance t;
  t.nHat = 1;
  t.triples = {{{1, 1, 1}}, {{1, 1, 1}}, {{1, 1, 1}}};
  const Instance I = reduce3dmToPmcapTraditional(t);
  const Matching M = pmcapTraditionalWitness(t, I, {0});
  CHECK(isPopularBruteForce(I, M, PopularityNotion::Traditional, 100000).popular);
}

TEST_CASE("isParetoOptimalBruteForce") {
  Builder b1;
  b1.house("h", 1);
  const Instance only = b1.applicant("a", 1, {"h"}).build();
  CHECK(isParetoOptimalBruteForce(only, makeMatching(only, {{0, 0}}), 100).popular);

  Builder b2;
  b2.house("h1", 1).house("h2", 1);
  const Instance free = b2.applicant("a", 1, {"h1", "h2"}).build();
  const auto res = isParetoOptimalBruteForce(free, makeMatching(free, {{0, 1}}), 100);
  CHECK_FALSE(res.popular);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->edges == std::vector<std::pair<int, int>>{{0, 0}});

  Builder b3;
  b3.house("h1", 1).house("h2", 1);
  const Instance swap =
      b3.applicant("a1", 1, {"h1", "h2"}).applicant("a2", 1, {"h1", "h2"}).build();
  CHECK(enumerateMatchings(swap, 100).size() == 7);
  CHECK(isParetoOptimalBruteForce(swap, makeMatching(swap, {{0, 1}, {1, 0}}), 100).popular);

  Builder b4;
  b4.house("h", 2);
  const Instance cap = b4.applicant("a", 2, {"h"}).build();
  CHECK(throwsKind([&] { isParetoOptimalBruteForce(cap, Matching{}, 100); },
                   ErrorKind::Unsupported));
}

TEST_CASE("vote antisymmetry and worst-pairing inequality") {
  std::mt19937 rng(17);
  RandomSpec spec;
  spec.maxApplicants = 3;
  spec.maxHouses = 3;
  spec.maxApplicantCap = 3;
  spec.maxHouseCap = 2;
  for (int it = 0; it < 120; ++it) {
    const Instance I = randomInstance(rng, spec);
    const auto all = enumerateMatchings(I, 20000);
    for (size_t i = 0; i < all.size(); i += 7)
      for (size_t j = 0; j < all.size(); j += 5) {
        const auto& M = all[i];
        const auto& M2 = all[j];
        CHECK(totalVote(I, M, M2, PopularityNotion::Lexicographic).total ==
              -totalVote(I, M2, M, PopularityNotion::Lexicographic).total);
        for (int a = 0; a < I.numApplicants(); ++a)
          CHECK(voteTraditional(I, a, M, M2) + voteTraditional(I, a, M2, M) <= 0);
      }
  }
}

TEST_CASE("notions coincide on unit applicant capacities") {
  std::mt19937 rng(19);
  RandomSpec spec;
  spec.maxApplicants = 3;
  spec.maxHouses = 3;
  spec.maxApplicantCap = 1;
  spec.maxHouseCap = 2;
  for (int it = 0; it < 150; ++it) {
    const Instance I = randomInstance(rng, spec);
    const auto all = enumerateMatchings(I, 20000);
    for (size_t i = 0; i < all.size(); i += 3)
      for (size_t j = 0; j < all.size(); j += 3)
        for (int a = 0; a < I.numApplicants(); ++a) {
          const int lex = voteLex(I, a, all[i], all[j]);
          CHECK(voteTraditional(I, a, all[i], all[j]) == lex);
        }
  }
}

TEST_CASE("enumerated and assignment-solved worst pairings agree") {
  const Instance I = [&] {
    Builder b;
    for (int h = 1; h <= 8; ++h) b.house("h" + std::to_string(h), 1);
    return b.applicant("a", 4, {"h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8"}).build();
  }();
  std::mt19937 rng(23);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int it = 0; it < 300; ++it) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5, 6, 7};
    std::shuffle(perm.begin(), perm.end(), rng);
    const int sx = pick(0, 4);
    const int sy = pick(0, 4);
    std::vector<int> X(perm.begin(), perm.begin() + sx);
    std::vector<int> Y(perm.begin() + sx, perm.begin() + sx + sy);
    CHECK(detail::worstPairingByEnumeration(I, 0, X, Y) ==
          detail::worstPairingByAssignment(I, 0, X, Y));
  }
}

TEST_CASE("popular implies Pareto-optimal on unit capacities") {
  std::mt19937 rng(29);
  RandomSpec spec;
  spec.maxApplicants = 3;
  spec.maxHouses = 3;
  spec.maxApplicantCap = 1;
  spec.maxHouseCap = 2;
  int popularSeen = 0;
  for (int it = 0; it < 150; ++it) {
    const Instance I = randomInstance(rng, spec);
    for (const auto& M : enumerateMatchings(I, 20000)) {
      if (isPopularBruteForce(I, M, PopularityNotion::Traditional, 20000).popular) {
        ++popularSeen;
        CHECK(isParetoOptimalBruteForce(I, M, 20000).popular);
      }
    }
  }
  CHECK(popularSeen > 50);
}

TEST_CASE("findLexDominator matches the brute-force oracle") {
  std::mt19937 rng(31);
  RandomSpec spec;
  spec.maxApplicants = 3;
  spec.maxHouses = 3;
  spec.maxApplicantCap = 2;
  spec.maxHouseCap = 2;
  for (int it = 0; it < 200; ++it) {
    const Instance I = randomInstance(rng, spec);
    const auto all = enumerateMatchings(I, 20000);
    for (size_t i = 0; i < all.size(); i += 4) {
      const bool popular =
          isPopularBruteForce(I, all[i], PopularityNotion::Lexicographic, 20000).popular;
      const auto dom = findLexDominator(I, all[i]);
      CHECK(popular == !dom.has_value());
      if (dom)
        CHECK(totalVote(I, all[i], *dom, PopularityNotion::Lexicographic).total < 0);
    }
  }
}
