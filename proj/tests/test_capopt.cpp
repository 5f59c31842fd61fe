#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mm/capopt.hpp"
#include "mm/chapop.hpp"
#include "mm/pareto.hpp"
#include "mm/votes.hpp"
#include "support/builders.hpp"

using namespace mm;
using namespace testsupport;

namespace {

// Independent reference for the minimum uniform raise: scan all bounded-norm
// change vectors and test for a perfect matching directly.
int exhaustiveMinMaxPerfect(const Instance& I, bool allowDecrease) {
  const int n = I.numApplicants();
  for (int k = 0; k <= n; ++k) {
    std::vector<int> delta(I.numHouses(), 0);
    bool found = false;
    auto rec = [&](auto&& self, int h) -> void {
      if (found) return;
      if (h == I.numHouses()) {
        std::vector<int> caps(I.numHouses());
        for (int i = 0; i < I.numHouses(); ++i) caps[i] = I.houseCapacity(i) + delta[i];
        found = maxMatchingSize(I.withHouseCapacities(caps)) == n;
        return;
      }
      const int lo = allowDecrease ? -std::min(I.houseCapacity(h), k) : 0;
      for (int d = lo; d <= k && !found; ++d) {
        delta[h] = d;
        self(self, h + 1);
      }
      delta[h] = 0;
    };
    rec(rec, 0);
    if (found) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("minSumPopPerfectIncrease on the worked example") {
  const Instance I = ex42Instance(2);
  const OptimizationResult r = minSumPopPerfectIncrease(I);
  CHECK(r.cost == 2);
  CHECK(r.change.delta == std::vector<int>{2, 0, 0});
  CHECK(r.certificate == OptimizationResult::Certificate::PolyOptimal);
  const Instance changed = applyChange(I, r.change);
  CHECK(isPerfect(changed, r.matching));
  CHECK(isPopularCHA(changed, r.matching).popular);
}

TEST_CASE("minSumPopPerfectIncrease trivial cases") {
  Builder b;
  b.house("h1", 1).house("h2", 2);
  const Instance ok =
      b.applicant("a1", 1, {"h1", "h2"}).applicant("a2", 1, {"h1", "h2"}).build();
  CHECK(minSumPopPerfectIncrease(ok).cost == 0);

  Builder b2;
  b2.house("h1", 1);
  const Instance contested = b2.applicant("a1", 1, {"h1"}).applicant("a2", 1, {"h1"}).build();
  const OptimizationResult r = minSumPopPerfectIncrease(contested);
  CHECK(r.cost == 1);
  CHECK(r.change.delta == std::vector<int>{1});
  CHECK(r.matching.edges.size() == 2);
}

TEST_CASE("minSumPopPerfectExact reproduces the decrease example") {
  const Instance I = ex42Instance(2);
  const auto withDec = minSumPopPerfectExact(I, 2, true);
  REQUIRE(withDec.has_value());
  CHECK(withDec->cost == 1);
  CHECK(withDec->change.delta == std::vector<int>{0, -1, 0});

  const auto withoutDec = minSumPopPerfectExact(I, 5, false);
  REQUIRE(withoutDec.has_value());
  CHECK(withoutDec->cost == 2);

  const auto tooTight = minSumPopPerfectExact(I, 0, true);
  CHECK_FALSE(tooTight.has_value());
}

TEST_CASE("decreases stay strictly cheaper across the worked-example family") {
  for (int n = 2; n <= 4; ++n) {
    const Instance I = ex42Instance(n);
    CHECK(minSumPopPerfectIncrease(I).cost == n);
    const auto dec = minSumPopPerfectExact(I, n, true);
    REQUIRE(dec.has_value());
    CHECK(dec->cost == 1);
    CHECK(dec->change.delta == std::vector<int>{0, -1, 0});
  }
}

TEST_CASE("pop-perfect optimizers reject hopeless applicants") {
  Builder b;
  b.house("h1", 1);
  const Instance empty = b.applicant("a1", 1, {}).applicant("a2", 1, {"h1"}).build();
  CHECK(throwsKind([&] { minSumPopPerfectIncrease(empty); }, ErrorKind::Infeasible));
  CHECK_FALSE(minSumPopPerfectExact(empty, 2, true).has_value());
  CHECK_FALSE(minMaxPopPerfectExact(empty, 2, true).has_value());
}

TEST_CASE("exact solver returns cost zero when nothing is needed") {
  Builder b;
  b.house("h1", 2);
  const Instance I = b.applicant("a1", 1, {"h1"}).applicant("a2", 1, {"h1"}).build();
  const auto res = minSumPopPerfectExact(I, 3, true);
  REQUIRE(res.has_value());
  CHECK(res->cost == 0);
}

TEST_CASE("increase-only agreement between poly and exact") {
  std::mt19937 rng(91);
  RandomSpec spec;
  spec.maxApplicants = 5;
  spec.maxHouses = 4;
  spec.maxApplicantCap = 1;
  spec.maxHouseCap = 3;
  spec.allowEmptyPrefs = false;
  for (int it = 0; it < 120; ++it) {
    const Instance I = randomInstance(rng, spec);
    const OptimizationResult poly = minSumPopPerfectIncrease(I);
    const auto exact = minSumPopPerfectExact(I, I.numApplicants(), false);
    REQUIRE(exact.has_value());
    CHECK(poly.cost == exact->cost);
    const auto withDec = minSumPopPerfectExact(I, I.numApplicants(), true);
    REQUIRE(withDec.has_value());
    CHECK(withDec->cost <= exact->cost);
  }
}

TEST_CASE("minMaxPopPerfectExact basics") {
  Builder b;
  b.house("h1", 2);
  const Instance fine = b.applicant("a1", 1, {"h1"}).applicant("a2", 1, {"h1"}).build();
  const auto zero = minMaxPopPerfectExact(fine, 3, false);
  REQUIRE(zero.has_value());
  CHECK(zero->cost == 0);

  Builder b2;
  b2.house("h1", 1);
  const Instance three = b2.applicant("a1", 1, {"h1"})
                             .applicant("a2", 1, {"h1"})
                             .applicant("a3", 1, {"h1"})
                             .build();
  const auto res = minMaxPopPerfectExact(three, 3, false);
  REQUIRE(res.has_value());
  CHECK(res->cost == 2);
  const auto resDec = minMaxPopPerfectExact(three, 3, true);
  REQUIRE(resDec.has_value());
  CHECK(resDec->cost == 2);
  CHECK_FALSE(minMaxPopPerfectExact(three, 1, true).has_value());
}

TEST_CASE("minSumParetoPerfect examples") {
  const Instance ex = ex42Instance(2);
  const OptimizationResult r = minSumParetoPerfect(ex);
  CHECK(r.cost == 0);  // a perfect matching already exists here
  CHECK(isPerfect(ex, r.matching));
  CHECK(isParetoOptimalBruteForce(ex, r.matching, 1000000).popular);

  Builder b;
  b.house("h1", 1);
  const Instance contested = b.applicant("a1", 1, {"h1"}).applicant("a2", 1, {"h1"}).build();
  CHECK(minSumParetoPerfect(contested).cost == 1);

  Builder b2;
  b2.house("h1", 1);
  const Instance empty = b2.applicant("a1", 1, {}).build();
  CHECK(throwsKind([&] { minSumParetoPerfect(empty); }, ErrorKind::Infeasible));
}

TEST_CASE("minMaxParetoPerfect examples") {
  Builder b;
  b.house("h1", 1).house("h2", 1);
  const Instance fine =
      b.applicant("a1", 1, {"h1", "h2"}).applicant("a2", 1, {"h1", "h2"}).build();
  CHECK(minMaxParetoPerfect(fine).cost == 0);

  Builder b2;
  b2.house("h1", 1);
  const Instance three = b2.applicant("a1", 1, {"h1"})
                             .applicant("a2", 1, {"h1"})
                             .applicant("a3", 1, {"h1"})
                             .build();
  const OptimizationResult r = minMaxParetoPerfect(three);
  CHECK(r.cost == 2);
  CHECK(r.change.delta == std::vector<int>{2});

  Builder b3;
  b3.house("h1", 1);
  const Instance empty = b3.applicant("a1", 1, {}).build();
  CHECK(throwsKind([&] { minMaxParetoPerfect(empty); }, ErrorKind::Infeasible));
}

TEST_CASE("pareto optimizers agree with exhaustive search and trimming is tight") {
  std::mt19937 rng(97);
  RandomSpec spec;
  spec.maxApplicants = 4;
  spec.maxHouses = 3;
  spec.maxApplicantCap = 1;
  spec.maxHouseCap = 2;
  spec.allowEmptyPrefs = false;
  for (int it = 0; it < 120; ++it) {
    const Instance I = randomInstance(rng, spec);
    const OptimizationResult minSum = minSumParetoPerfect(I);
    CHECK(minSum.cost == I.numApplicants() - maxMatchingSize(I));
    const Instance changedSum = applyChange(I, minSum.change);
    CHECK(isPerfect(changedSum, minSum.matching));
    CHECK(isParetoOptimalBruteForce(changedSum, minSum.matching, 500000).popular);

    const OptimizationResult minMax = minMaxParetoPerfect(I);
    const int refIncrease = exhaustiveMinMaxPerfect(I, false);
    const int refBoth = exhaustiveMinMaxPerfect(I, true);
    CHECK(minMax.cost == refIncrease);
    CHECK(refIncrease == refBoth);  // decreases never help perfectness
    CHECK(minMax.change.linf() == minMax.cost);
    const Instance changedMax = applyChange(I, minMax.change);
    CHECK(isPerfect(changedMax, minMax.matching));
    CHECK(isParetoOptimalBruteForce(changedMax, minMax.matching, 500000).popular);
  }
}

TEST_CASE("search guard throws") {
  Builder b;
  for (int h = 1; h <= 6; ++h) b.house("h" + std::to_string(h), 1);
  Builder& withApplicants = b;
  for (int a = 1; a <= 6; ++a)
    withApplicants.applicant("a" + std::to_string(a), 1,
                             {"h1", "h2", "h3", "h4", "h5", "h6"});
  const Instance I = withApplicants.build();
  CHECK(throwsKind([&] { minSumPopPerfectExact(I, 6, true, 50); }, ErrorKind::TooLarge));
}
