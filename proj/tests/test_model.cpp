#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mm/instance.hpp"
#include "mm/io.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace mm;
using namespace testsupport;

TEST_CASE("parse minimal instance") {
  const Instance I = parseInstance(
      R"({"applicants":[{"id":"a1","capacity":1,"prefs":["h1"]}],"houses":[{"id":"h1","capacity":1}]})");
  CHECK(I.numApplicants() == 1);
  CHECK(I.numHouses() == 1);
  CHECK(I.acceptable(0, 0));
  CHECK(I.applicantsUnit());
  CHECK(I.housesUnit());
}

TEST_CASE("parse worked example") {
  const Instance I = serializeAndReparse(ex42Instance(2));
  CHECK(I.numApplicants() == 5);
  CHECK(I.numHouses() == 3);
  CHECK(I.houseCapacity(*I.houseIndex("h2")) == 2);
  CHECK(I.houseCapacity(*I.houseIndex("h3")) == 3);
  CHECK(*I.rankOf(*I.applicantIndex("b"), *I.houseIndex("h2")) == 1);
}

TEST_CASE("validation errors") {
  CHECK(throwsKind(
      [] {
        parseInstance(
            R"({"applicants":[{"id":"a1","capacity":1,"prefs":["h1","h1"]}],"houses":[{"id":"h1","capacity":1}]})");
      },
      ErrorKind::Validation));  // duplicate preference
  CHECK(throwsKind(
      [] {
        parseInstance(
            R"({"applicants":[],"houses":[{"id":"h1","capacity":0}]})");
      },
      ErrorKind::Validation));  // zero capacity
  CHECK(throwsKind(
      [] {
        parseInstance(
            R"({"applicants":[{"id":"a1","capacity":1,"prefs":["nope"]}],"houses":[{"id":"h1","capacity":1}]})");
      },
      ErrorKind::Validation));  // unknown house
  CHECK(throwsKind([] { parseInstance("{\"applicants\": [,"); }, ErrorKind::Parse));
  CHECK(throwsKind(
      [] {
        parseInstance(
            R"({"applicants":[{"id":"a1","capacity":1,"prefs":[]},{"id":"a1","capacity":1,"prefs":[]}],"houses":[{"id":"h1","capacity":1}]})");
      },
      ErrorKind::Validation));  // duplicate applicant id
}

TEST_CASE("parse error reports a line") {
  try {
    parseInstance("{\n\"applicants\": [,\n");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("round trips") {
  const Instance ex = ex42Instance(2);
  const std::string doc = serializeInstance(ex);
  CHECK(serializeInstance(parseInstance(doc)) == doc);

  std::mt19937 rng(7);
  RandomSpec spec;
  spec.maxHouseCap = 3;
  for (int it = 0; it < 200; ++it) {
    const Instance I = randomInstance(rng, spec);
    const std::string s = serializeInstance(I);
    CHECK(serializeInstance(parseInstance(s)) == s);
  }
}

TEST_CASE("matching io") {
  const Instance I = ex42Instance(2);
  const Matching M = parseMatching(
      I, R"({"edges":[["a2","h3"],["a1","h1"],["b","h2"],["a3","h3"],["a4","h3"]]})");
  // canonical serialization sorts by declaration indices
  CHECK(serializeMatching(I, M) ==
        R"({"edges":[["a1","h1"],["a2","h3"],["a3","h3"],["a4","h3"],["b","h2"]]})");
  CHECK(throwsKind([&] { parseMatching(I, R"({"edges":[["a1","h1"],["a1","h1"]]})"); },
                   ErrorKind::Validation));
  CHECK(throwsKind([&] { parseMatching(I, R"({"edges":[["zz","h1"]]})"); },
                   ErrorKind::Validation));
  CHECK(throwsKind(
      [&] { parseMatching(I, R"({"edges":[["a1","h1"],["a2","h1"]]})"); },
      ErrorKind::Validation));  // h1 capacity exceeded
}

TEST_CASE("capacity change io") {
  const Instance I = ex42Instance(2);
  const CapacityChange c = parseCapacityChange(I, R"({"delta":{"h2":-1}})");
  CHECK(c.delta == std::vector<int>{0, -1, 0});
  CHECK(c.l1() == 1);
  CHECK(c.linf() == 1);
  CHECK(serializeCapacityChange(I, c) == R"({"delta":{"h2":-1}})");
  CHECK(serializeCapacityChange(I, zeroChange(I)) == R"({"delta":{}})");
  CHECK(throwsKind([&] { parseCapacityChange(I, R"({"delta":{"h1":-2}})"); },
                   ErrorKind::Validation));
  CHECK(throwsKind([&] { parseCapacityChange(I, R"({"delta":{"zz":1}})"); },
                   ErrorKind::Validation));
  const Instance dec = applyChange(I, c);
  CHECK(dec.houseCapacity(1) == 1);
}

TEST_CASE("isPerfect") {
  Builder b;
  b.house("h1", 1);
  const Instance one = b.applicant("a1", 1, {"h1"}).build();
  CHECK(isPerfect(one, makeMatching(one, {{0, 0}})));

  Builder b2;
  b2.house("h1", 1);
  const Instance two = b2.applicant("a1", 2, {"h1"}).build();
  CHECK_FALSE(isPerfect(two, makeMatching(two, {{0, 0}})));

  const Instance ex = ex42Instance(2);
  const Matching M = parseMatching(
      ex, R"({"edges":[["a1","h1"],["b","h2"],["a2","h3"],["a3","h3"],["a4","h3"]]})");
  CHECK(isPerfect(ex, M));
}

TEST_CASE("enumeration examples") {
  Builder b1;
  b1.house("h1", 1);
  const Instance tiny = b1.applicant("a1", 1, {"h1"}).build();
  const auto all1 = enumerateMatchings(tiny, 100);
  REQUIRE(all1.size() == 2);
  CHECK(all1[0].edges.empty());
  CHECK(all1[1].edges == std::vector<std::pair<int, int>>{{0, 0}});

  Builder b2;
  b2.house("h1", 1).house("h2", 1);
  const Instance capTwo = b2.applicant("a1", 2, {"h1", "h2"}).build();
  const auto all2 = enumerateMatchings(capTwo, 100);
  REQUIRE(all2.size() == 4);  // empty, each single edge, both
  CHECK(all2[1].edges == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(all2[2].edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}});
  CHECK(all2[3].edges == std::vector<std::pair<int, int>>{{0, 1}});

  Builder b3;
  b3.house("h1", 1);
  const Instance contested = b3.applicant("a1", 1, {"h1"}).applicant("a2", 1, {"h1"}).build();
  CHECK(enumerateMatchings(contested, 100).size() == 3);
}

TEST_CASE("enumeration limit guard") {
  Builder b;
  b.house("h1", 1).house("h2", 1);
  const Instance I =
      b.applicant("a1", 1, {"h1", "h2"}).applicant("a2", 1, {"h1", "h2"}).build();
  CHECK(throwsKind([&] { enumerateMatchings(I, 3); }, ErrorKind::TooLarge));
  CHECK(throwsKind([&] { enumerateMatchings(I, 0); }, ErrorKind::Contract));
  // early stop wins over the guard
  long long seen = 0;
  forEachMatching(I, 3, [&](const Matching&) { return ++seen < 2; });
  CHECK(seen == 2);
}

namespace {

bool lexBefore(const Matching& x, const Matching& y) {
  return std::lexicographical_compare(x.edges.begin(), x.edges.end(), y.edges.begin(),
                                      y.edges.end());
}

}  // namespace

TEST_CASE("enumeration order, validity and count oracle") {
  std::mt19937 rng(11);
  RandomSpec spec;
  spec.maxApplicants = 3;
  spec.maxHouses = 3;
  spec.maxApplicantCap = 2;
  spec.maxHouseCap = 2;
  for (int it = 0; it < 400; ++it) {
    const Instance I = randomInstance(rng, spec);
    const auto all = enumerateMatchings(I, 100000);
    CHECK(static_cast<long long>(all.size()) == countMatchingsBacktrack(I));
    for (size_t k = 0; k < all.size(); ++k) {
      validateMatching(I, all[k]);
      if (k > 0) CHECK(lexBefore(all[k - 1], all[k]));
    }
  }
}

namespace {

// every ordered list over a subset of [m]
std::vector<std::vector<int>> allPrefLists(int m) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<int> cur;
  std::vector<char> used(m, 0);
  auto rec = [&](auto&& self) -> void {
    for (int h = 0; h < m; ++h) {
      if (used[h]) continue;
      used[h] = 1;
      cur.push_back(h);
      out.push_back(cur);
      self(self);
      cur.pop_back();
      used[h] = 0;
    }
  };
  rec(rec);
  return out;
}

}  // namespace

TEST_CASE("count oracle over every instance up to 3x3 with capacities up to 2") {
  long long instances = 0, mismatches = 0;
  for (int m = 1; m <= 3; ++m) {
    const auto lists = allPrefLists(m);
    const int applicantOptions = static_cast<int>(lists.size()) * 2;  // list x capacity
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> odo(n, 0);
      std::vector<int> houseCapOdo;
      while (true) {
        for (int capMask = 0; capMask < (1 << m); ++capMask) {
          std::vector<HouseSpec> houses;
          for (int h = 0; h < m; ++h)
            houses.push_back({"h" + std::to_string(h + 1), (capMask >> h & 1) + 1});
          std::vector<ApplicantSpec> applicants;
          for (int a = 0; a < n; ++a)
            applicants.push_back({"a" + std::to_string(a + 1), odo[a] % 2 + 1,
                                  lists[odo[a] / 2]});
          const Instance I(applicants, houses);
          ++instances;
          if (static_cast<long long>(enumerateMatchings(I, 1000000).size()) !=
              countMatchingsBacktrack(I))
            ++mismatches;
        }
        int pos = 0;
        while (pos < n && ++odo[pos] == applicantOptions) odo[pos++] = 0;
        if (pos == n) break;
      }
    }
  }
  CHECK(instances == 275200);  // sum over n,m <= 3 of (lists(m)*2)^n * 2^m
  CHECK(mismatches == 0);
}

TEST_CASE("maximality helper") {
  Builder b;
  b.house("h1", 1).house("h2", 1);
  const Instance I = b.applicant("a1", 1, {"h1", "h2"}).build();
  CHECK_FALSE(isMaximal(I, Matching{}));
  CHECK(isMaximal(I, makeMatching(I, {{0, 1}})));
}
