#include "mm/reductions.hpp"

#include <algorithm>

#include "json.hpp"
#include "mm/capopt.hpp"
#include "mm/chapop.hpp"
#include "mm/votes.hpp"

namespace mm {

namespace {

using Json = nlohmann::ordered_json;

std::string num(int v) { return std::to_string(v); }

Json parseDoc(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed ") + what + " document: " + e.what());
  }
}

}  // namespace

void validateThreeDM(const ThreeDMInstance& t) {
  if (t.nHat < 1) fail(ErrorKind::Validation, "nHat must be >= 1");
  if (t.triples.empty()) fail(ErrorKind::Validation, "triple list must be nonempty");
  for (const auto& tr : t.triples)
    for (int c = 0; c < 3; ++c)
      if (tr[c] < 1 || tr[c] > t.nHat)
        fail(ErrorKind::Validation, "triple component out of range [1, nHat]");
  if (!t.strict) return;
  if (static_cast<int>(t.triples.size()) != 3 * t.nHat)
    fail(ErrorKind::Validation, "strict instances need exactly 3*nHat triples");
  for (int c = 0; c < 3; ++c) {
    std::vector<int> occ(t.nHat + 1, 0);
    for (const auto& tr : t.triples) ++occ[tr[c]];
    for (int i = 1; i <= t.nHat; ++i)
      if (occ[i] != 3)
        fail(ErrorKind::Validation, "strict instances need every element in exactly 3 triples");
  }
}

ThreeDMInstance parseThreeDM(const std::string& text) {
  const Json doc = parseDoc(text, "3dm");
  ThreeDMInstance t;
  if (!doc.is_object() || !doc.contains("nHat") || !doc.contains("triples"))
    fail(ErrorKind::Parse, "3dm document needs 'nHat' and 'triples'");
  t.nHat = doc["nHat"].get<int>();
  for (const auto& trj : doc["triples"]) {
    if (!trj.is_array() || trj.size() != 3)
      fail(ErrorKind::Parse, "each triple must be an [a, b, c] array");
    t.triples.push_back({trj[0].get<int>(), trj[1].get<int>(), trj[2].get<int>()});
  }
  t.strict = doc.value("strict", true);
  validateThreeDM(t);
  return t;
}

std::string serializeThreeDM(const ThreeDMInstance& t) {
  Json doc = Json::object();
  doc["nHat"] = t.nHat;
  doc["triples"] = Json::array();
  for (const auto& tr : t.triples) doc["triples"].push_back(Json::array({tr[0], tr[1], tr[2]}));
  doc["strict"] = t.strict;
  return doc.dump();
}

void validateSetCover(const SetCoverInstance& s) {
  if (s.nElements < 1) fail(ErrorKind::Validation, "nElements must be >= 1");
  std::vector<char> covered(s.nElements + 1, 0);
  for (const auto& set : s.sets) {
    if (set.empty()) fail(ErrorKind::Validation, "sets must be nonempty");
    std::vector<char> seen(s.nElements + 1, 0);
    for (int e : set) {
      if (e < 1 || e > s.nElements)
        fail(ErrorKind::Validation, "set element out of range [1, nElements]");
      if (seen[e]++) fail(ErrorKind::Validation, "duplicate element within a set");
      covered[e] = 1;
    }
  }
  for (int e = 1; e <= s.nElements; ++e)
    if (!covered[e]) fail(ErrorKind::Validation, "element " + num(e) + " is covered by no set");
}

SetCoverInstance parseSetCover(const std::string& text) {
  const Json doc = parseDoc(text, "set cover");
  SetCoverInstance s;
  if (!doc.is_object() || !doc.contains("nElements") || !doc.contains("sets") ||
      !doc.contains("k"))
    fail(ErrorKind::Parse, "set cover document needs 'nElements', 'sets' and 'k'");
  s.nElements = doc["nElements"].get<int>();
  for (const auto& setJson : doc["sets"]) {
    std::vector<int> set;
    for (const auto& e : setJson) set.push_back(e.get<int>());
    s.sets.push_back(std::move(set));
  }
  s.k = doc["k"].get<int>();
  validateSetCover(s);
  return s;
}

std::string serializeSetCover(const SetCoverInstance& s) {
  Json doc = Json::object();
  doc["nElements"] = s.nElements;
  doc["sets"] = Json::array();
  for (const auto& set : s.sets) {
    Json sj = Json::array();
    for (int e : set) sj.push_back(e);
    doc["sets"].push_back(std::move(sj));
  }
  doc["k"] = s.k;
  return doc.dump();
}

std::optional<std::vector<int>> oracleExactCover(const ThreeDMInstance& t) {
  validateThreeDM(t);
  const int want = t.nHat;
  std::vector<char> usedA(t.nHat + 1, 0), usedB(t.nHat + 1, 0), usedC(t.nHat + 1, 0);
  std::vector<int> chosen;
  std::optional<std::vector<int>> found;

  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(chosen.size()) == want) {
      found = chosen;
      return true;
    }
    const int remaining = want - static_cast<int>(chosen.size());
    for (int j = start; j + remaining <= static_cast<int>(t.triples.size()); ++j) {
      const auto& tr = t.triples[j];
      if (usedA[tr[0]] || usedB[tr[1]] || usedC[tr[2]]) continue;
      usedA[tr[0]] = usedB[tr[1]] = usedC[tr[2]] = 1;
      chosen.push_back(j);
      if (self(self, j + 1)) return true;
      chosen.pop_back();
      usedA[tr[0]] = usedB[tr[1]] = usedC[tr[2]] = 0;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

SetCoverSolution oracleSetCover(const SetCoverInstance& s, long long guard) {
  validateSetCover(s);
  const int m = static_cast<int>(s.sets.size());
  long long tried = 0;
  std::vector<int> chosen;

  auto covers = [&](const std::vector<int>& subset) {
    std::vector<char> covered(s.nElements + 1, 0);
    for (int j : subset)
      for (int e : s.sets[j]) covered[e] = 1;
    for (int e = 1; e <= s.nElements; ++e)
      if (!covered[e]) return false;
    return true;
  };

  for (int size = 0; size <= m; ++size) {
    std::optional<std::vector<int>> found;
    auto rec = [&](auto&& self, int start) -> bool {
      if (static_cast<int>(chosen.size()) == size) {
        if (++tried > guard) fail(ErrorKind::TooLarge, "instance too large for exact search");
        if (covers(chosen)) {
          found = chosen;
          return true;
        }
        return false;
      }
      for (int j = start; j < m; ++j) {
        chosen.push_back(j);
        if (self(self, j + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    rec(rec, 0);
    if (found) return {size, *found};
  }
  fail(ErrorKind::Internal, "validated set-cover instance has no cover");
}

// --- generators -------------------------------------------------------------

namespace {

// Element-house ids for the constructions indexed over A u B u C.
std::string elementHouseId(int globalIndex) { return "e" + num(globalIndex); }

// Global element indices of a triple, ascending: A block, then B, then C.
std::array<int, 3> globalIndices(const ThreeDMInstance& t, const std::array<int, 3>& tr) {
  return {tr[0], t.nHat + tr[1], 2 * t.nHat + tr[2]};
}

}  // namespace

Instance reduce3dmToPmcapTraditional(const ThreeDMInstance& t) {
  validateThreeDM(t);
  std::vector<HouseSpec> houses;
  for (int i = 1; i <= t.nHat; ++i) houses.push_back({"a" + num(i), 1});
  for (int i = 1; i <= t.nHat; ++i) houses.push_back({"b" + num(i), 1});
  for (int i = 1; i <= t.nHat; ++i) houses.push_back({"c" + num(i), 1});

  std::vector<ApplicantSpec> applicants;
  for (size_t j = 0; j < t.triples.size(); ++j) {
    const auto& tr = t.triples[j];
    ApplicantSpec a;
    a.id = "s" + num(static_cast<int>(j) + 1);
    a.capacity = 3;
    a.prefs = {2 * t.nHat + tr[2] - 1, t.nHat + tr[1] - 1, tr[0] - 1};  // c > b > a
    applicants.push_back(std::move(a));
  }
  return Instance(std::move(applicants), std::move(houses));
}

Instance reduce3dmToPmcapLex(const ThreeDMInstance& t) {
  validateThreeDM(t);
  std::vector<HouseSpec> houses;
  for (int i = 1; i <= t.nHat; ++i) houses.push_back({"a" + num(i), 1});
  for (int i = 1; i <= t.nHat; ++i) houses.push_back({"b" + num(i), 1});
  for (int i = 1; i <= t.nHat; ++i) houses.push_back({"c" + num(i), 1});
  const int numTriples = static_cast<int>(t.triples.size());
  const int hBase = 3 * t.nHat;
  for (int j = 1; j <= numTriples; ++j)
    for (int l = 1; l <= 3; ++l) houses.push_back({"h" + num(j) + "_" + num(l), 1});

  auto cycleHouse = [&](int j, int l) { return hBase + 3 * (j - 1) + (l - 1); };

  std::vector<ApplicantSpec> applicants;
  for (int j = 1; j <= numTriples; ++j) {
    const auto& tr = t.triples[j - 1];
    const std::array<int, 3> elems = {tr[0] - 1, t.nHat + tr[1] - 1, 2 * t.nHat + tr[2] - 1};
    for (int l = 1; l <= 3; ++l) {
      ApplicantSpec a;
      a.id = "s" + num(j) + "_" + num(l);
      a.capacity = 2;
      a.prefs = {cycleHouse(j, l), elems[l - 1], cycleHouse(j, l % 3 + 1)};
      applicants.push_back(std::move(a));
    }
  }
  return Instance(std::move(applicants), std::move(houses));
}

MinSumDecReduction reduce3dmToMinSumDec(const ThreeDMInstance& t) {
  validateThreeDM(t);
  const int numTriples = static_cast<int>(t.triples.size());
  std::vector<HouseSpec> houses;
  for (int i = 1; i <= 3 * t.nHat; ++i) houses.push_back({elementHouseId(i), 1});
  for (int j = 1; j <= numTriples; ++j) {
    houses.push_back({"t" + num(j), 3});
    houses.push_back({"p" + num(j), 2});
    houses.push_back({"q" + num(j), 1});
    houses.push_back({"x" + num(j), 1});
  }
  auto gadget = [&](int j, int offset) { return 3 * t.nHat + 4 * (j - 1) + offset; };

  std::vector<ApplicantSpec> applicants;
  for (int j = 1; j <= numTriples; ++j) {
    const auto g = globalIndices(t, t.triples[j - 1]);
    for (int l = 0; l < 3; ++l)
      applicants.push_back(
          {"s" + num(j) + "_" + num(l + 1), 1, {g[l] - 1, gadget(j, 1), gadget(j, 0)}});
    applicants.push_back({"a" + num(j), 1, {gadget(j, 2), gadget(j, 1), gadget(j, 3)}});
    applicants.push_back({"pd" + num(j), 1, {gadget(j, 1)}});
    applicants.push_back({"qd" + num(j), 1, {gadget(j, 2)}});
  }
  return {Instance(std::move(applicants), std::move(houses)), 2LL * t.nHat};
}

MinMaxReduction reduce3dmToMinMax(const ThreeDMInstance& t, MinMaxVariant variant) {
  validateThreeDM(t);
  const bool increaseOnly = variant == MinMaxVariant::IncreaseK2;
  const int numTriples = static_cast<int>(t.triples.size());

  std::vector<HouseSpec> houses;
  for (int i = 1; i <= 3 * t.nHat; ++i) houses.push_back({elementHouseId(i), 1});
  for (int j = 1; j <= numTriples; ++j) {
    houses.push_back({"t" + num(j), 4});
    houses.push_back({"p" + num(j), increaseOnly ? 1 : 2});
    houses.push_back({"q" + num(j), 1});
  }
  houses.push_back({"x", increaseOnly ? 2 * t.nHat - 2 : 2 * t.nHat - 1});
  const int xHouse = static_cast<int>(houses.size()) - 1;
  auto gadget = [&](int j, int offset) { return 3 * t.nHat + 3 * (j - 1) + offset; };

  std::vector<ApplicantSpec> applicants;
  for (int i = 1; i <= 3 * t.nHat; ++i) {
    if (increaseOnly) {
      applicants.push_back({"ed" + num(i) + "_1", 1, {i - 1}});
      applicants.push_back({"ed" + num(i) + "_2", 1, {i - 1}});
    } else {
      applicants.push_back({"ed" + num(i), 1, {i - 1}});
    }
  }
  for (int j = 1; j <= numTriples; ++j) {
    const auto g = globalIndices(t, t.triples[j - 1]);
    for (int l = 0; l < 4; ++l) {
      const int elem = g[std::min(l, 2)];  // the fourth applicant shares the c-type house
      applicants.push_back(
          {"s" + num(j) + "_" + num(l + 1), 1, {elem - 1, gadget(j, 1), gadget(j, 0)}});
    }
    applicants.push_back({"a" + num(j), 1, {gadget(j, 2), gadget(j, 1), xHouse}});
    applicants.push_back({"pd" + num(j), 1, {gadget(j, 1)}});
    const int qDummies = increaseOnly ? 3 : 2;
    for (int d = 1; d <= qDummies; ++d)
      applicants.push_back({"qd" + num(j) + "_" + num(d), 1, {gadget(j, 2)}});
  }
  return {Instance(std::move(applicants), std::move(houses),
                   Instance::CapacityPolicy::AllowZeroHouse),
          increaseOnly ? 2 : 1};
}

Instance reduceSetCoverToMinMax(const SetCoverInstance& s, std::optional<long long> nScale) {
  validateSetCover(s);
  if (nScale && *nScale < 1) fail(ErrorKind::Contract, "nScale must be >= 1");
  const int m = static_cast<int>(s.sets.size());
  const long long N =
      nScale ? *nScale
             : static_cast<long long>(s.nElements) * s.nElements * m;

  std::vector<std::vector<int>> sorted(s.sets.size());
  for (int j = 0; j < m; ++j) {
    sorted[j] = s.sets[j];
    std::sort(sorted[j].begin(), sorted[j].end());
  }

  std::vector<HouseSpec> houses;
  std::vector<int> setHouseBase(m), wHouse(m);
  for (int j = 0; j < m; ++j) {
    setHouseBase[j] = static_cast<int>(houses.size());
    for (size_t l = 1; l <= sorted[j].size(); ++l)
      houses.push_back({"s" + num(j + 1) + "_" + num(static_cast<int>(l)), 1});
    wHouse[j] = static_cast<int>(houses.size());
    houses.push_back({"w" + num(j + 1), static_cast<int>(N)});
  }
  const int fHouse = static_cast<int>(houses.size());
  houses.push_back({"f", 1});
  const int xBase = static_cast<int>(houses.size());
  for (long long l = 1; l <= N; ++l) houses.push_back({"x" + num(static_cast<int>(l)), 1});

  std::vector<ApplicantSpec> applicants;
  for (int i = 1; i <= s.nElements; ++i) {
    ApplicantSpec a;
    a.id = "e" + num(i);
    a.prefs.push_back(fHouse);
    for (int j = 0; j < m; ++j) {
      const auto it = std::find(sorted[j].begin(), sorted[j].end(), i);
      if (it != sorted[j].end())
        a.prefs.push_back(setHouseBase[j] + static_cast<int>(it - sorted[j].begin()));
    }
    applicants.push_back(std::move(a));
  }
  applicants.push_back({"fd", 1, {fHouse}});
  for (int j = 0; j < m; ++j) {
    for (size_t l = 1; l <= sorted[j].size(); ++l)
      applicants.push_back({"t" + num(j + 1) + "_" + num(static_cast<int>(l)), 1,
                            {setHouseBase[j] + static_cast<int>(l) - 1}});
    for (long long l = 1; l <= N; ++l) {
      ApplicantSpec a;
      a.id = "a" + num(j + 1) + "_" + num(static_cast<int>(l));
      a.prefs.push_back(xBase + static_cast<int>(l) - 1);
      for (size_t pos = 0; pos < sorted[j].size(); ++pos)
        a.prefs.push_back(setHouseBase[j] + static_cast<int>(pos));
      a.prefs.push_back(wHouse[j]);
      applicants.push_back(std::move(a));
    }
  }
  for (long long l = 1; l <= N; ++l)
    applicants.push_back({"y" + num(static_cast<int>(l)), 1, {xBase + static_cast<int>(l) - 1}});
  return Instance(std::move(applicants), std::move(houses));
}

// --- prescribed forward witnesses -------------------------------------------

namespace {

int houseByIdOrFail(const Instance& I, const std::string& id) {
  const auto h = I.houseIndex(id);
  if (!h) fail(ErrorKind::Internal, "generated instance misses house '" + id + "'");
  return *h;
}

int applicantByIdOrFail(const Instance& I, const std::string& id) {
  const auto a = I.applicantIndex(id);
  if (!a) fail(ErrorKind::Internal, "generated instance misses applicant '" + id + "'");
  return *a;
}

std::vector<char> coverMask(size_t numTriples, const std::vector<int>& cover) {
  std::vector<char> mask(numTriples, 0);
  for (int j : cover) mask[j] = 1;
  return mask;
}

}  // namespace

Matching pmcapTraditionalWitness(const ThreeDMInstance& t, const Instance& I,
                                 const std::vector<int>& cover) {
  std::vector<std::pair<int, int>> edges;
  for (int j : cover) {
    const int a = applicantByIdOrFail(I, "s" + num(j + 1));
    for (int h : I.applicant(a).prefs) edges.emplace_back(a, h);
  }
  (void)t;
  return makeMatching(I, std::move(edges));
}

Matching pmcapLexWitness(const ThreeDMInstance& t, const Instance& I,
                         const std::vector<int>& cover) {
  const auto mask = coverMask(t.triples.size(), cover);
  std::vector<std::pair<int, int>> edges;
  for (size_t j = 0; j < t.triples.size(); ++j) {
    for (int l = 1; l <= 3; ++l) {
      const int a = applicantByIdOrFail(I, "s" + num(static_cast<int>(j) + 1) + "_" + num(l));
      const auto& prefs = I.applicant(a).prefs;
      edges.emplace_back(a, prefs[0]);
      if (mask[j]) edges.emplace_back(a, prefs[1]);
    }
  }
  return makeMatching(I, std::move(edges));
}

std::pair<CapacityChange, Matching> minSumDecWitness(const ThreeDMInstance& t, const Instance& I,
                                                     const std::vector<int>& cover) {
  const auto mask = coverMask(t.triples.size(), cover);
  CapacityChange r = zeroChange(I);
  std::vector<std::pair<int, int>> edges;
  for (size_t j = 0; j < t.triples.size(); ++j) {
    const std::string js = num(static_cast<int>(j) + 1);
    const auto g = globalIndices(t, t.triples[j]);
    const int pHouse = houseByIdOrFail(I, "p" + js);
    if (!mask[j]) r.delta[pHouse] = -1;
    for (int l = 0; l < 3; ++l) {
      const int a = applicantByIdOrFail(I, "s" + js + "_" + num(l + 1));
      edges.emplace_back(a, mask[j] ? houseByIdOrFail(I, elementHouseId(g[l]))
                                    : houseByIdOrFail(I, "t" + js));
    }
    edges.emplace_back(applicantByIdOrFail(I, "a" + js),
                       mask[j] ? pHouse : houseByIdOrFail(I, "x" + js));
    edges.emplace_back(applicantByIdOrFail(I, "pd" + js), pHouse);
    edges.emplace_back(applicantByIdOrFail(I, "qd" + js), houseByIdOrFail(I, "q" + js));
  }
  Matching M = makeMatching(applyChange(I, r), std::move(edges));
  return {std::move(r), std::move(M)};
}

std::pair<CapacityChange, Matching> minMaxWitness(const ThreeDMInstance& t, const Instance& I,
                                                  MinMaxVariant variant,
                                                  const std::vector<int>& cover) {
  const bool increaseOnly = variant == MinMaxVariant::IncreaseK2;
  const int step = increaseOnly ? 2 : 1;
  const auto mask = coverMask(t.triples.size(), cover);
  CapacityChange r = zeroChange(I);
  std::vector<std::pair<int, int>> edges;

  for (int i = 1; i <= 3 * t.nHat; ++i) {
    const int e = houseByIdOrFail(I, elementHouseId(i));
    r.delta[e] = step;
    if (increaseOnly) {
      edges.emplace_back(applicantByIdOrFail(I, "ed" + num(i) + "_1"), e);
      edges.emplace_back(applicantByIdOrFail(I, "ed" + num(i) + "_2"), e);
    } else {
      edges.emplace_back(applicantByIdOrFail(I, "ed" + num(i)), e);
    }
  }
  const int xHouse = houseByIdOrFail(I, "x");
  r.delta[xHouse] = step;

  for (size_t j = 0; j < t.triples.size(); ++j) {
    const std::string js = num(static_cast<int>(j) + 1);
    const auto g = globalIndices(t, t.triples[j]);
    const int pHouse = houseByIdOrFail(I, "p" + js);
    const int qHouse = houseByIdOrFail(I, "q" + js);
    const int tHouse = houseByIdOrFail(I, "t" + js);
    r.delta[qHouse] = step;
    r.delta[pHouse] = mask[j] ? step : (increaseOnly ? 0 : -1);

    const int s4 = applicantByIdOrFail(I, "s" + js + "_4");
    const int aj = applicantByIdOrFail(I, "a" + js);
    if (mask[j]) {
      for (int l = 0; l < 3; ++l)
        edges.emplace_back(applicantByIdOrFail(I, "s" + js + "_" + num(l + 1)),
                           houseByIdOrFail(I, elementHouseId(g[l])));
      edges.emplace_back(s4, pHouse);
      edges.emplace_back(aj, pHouse);
    } else {
      for (int l = 0; l < 4; ++l)
        edges.emplace_back(applicantByIdOrFail(I, "s" + js + "_" + num(l + 1)), tHouse);
      edges.emplace_back(aj, xHouse);
    }
    edges.emplace_back(applicantByIdOrFail(I, "pd" + js), pHouse);
    const int qDummies = increaseOnly ? 3 : 2;
    for (int d = 1; d <= qDummies; ++d)
      edges.emplace_back(applicantByIdOrFail(I, "qd" + js + "_" + num(d)), qHouse);
  }
  Matching M = makeMatching(applyChange(I, r), std::move(edges));
  return {std::move(r), std::move(M)};
}

std::pair<CapacityChange, Matching> setCoverWitness(const SetCoverInstance& s, const Instance& I,
                                                    const std::vector<int>& cover,
                                                    std::optional<long long> nScale) {
  const int m = static_cast<int>(s.sets.size());
  const long long N =
      nScale ? *nScale : static_cast<long long>(s.nElements) * s.nElements * m;
  const int k = static_cast<int>(cover.size());
  const auto mask = coverMask(s.sets.size(), cover);

  CapacityChange r = zeroChange(I);
  for (int j : cover)
    for (size_t l = 1; l <= s.sets[j].size(); ++l)
      r.delta[houseByIdOrFail(I, "s" + num(j + 1) + "_" + num(static_cast<int>(l)))] = 1;
  for (long long l = 1; l <= N; ++l)
    r.delta[houseByIdOrFail(I, "x" + num(static_cast<int>(l)))] = k;

  std::vector<std::pair<int, int>> edges;
  edges.emplace_back(applicantByIdOrFail(I, "fd"), houseByIdOrFail(I, "f"));
  for (long long l = 1; l <= N; ++l)
    edges.emplace_back(applicantByIdOrFail(I, "y" + num(static_cast<int>(l))),
                       houseByIdOrFail(I, "x" + num(static_cast<int>(l))));
  for (int j = 0; j < m; ++j)
    for (size_t l = 1; l <= s.sets[j].size(); ++l)
      edges.emplace_back(
          applicantByIdOrFail(I, "t" + num(j + 1) + "_" + num(static_cast<int>(l))),
          houseByIdOrFail(I, "s" + num(j + 1) + "_" + num(static_cast<int>(l))));

  // Each element applicant takes her best increased set house.
  for (int i = 1; i <= s.nElements; ++i) {
    const int a = applicantByIdOrFail(I, "e" + num(i));
    int target = -1;
    for (int h : I.applicant(a).prefs) {
      if (h != houseByIdOrFail(I, "f") && r.delta[h] > 0) {
        target = h;
        break;
      }
    }
    if (target < 0) fail(ErrorKind::Internal, "cover leaves an element applicant unplaced");
    edges.emplace_back(a, target);
  }
  for (int j = 0; j < m; ++j)
    for (long long l = 1; l <= N; ++l)
      edges.emplace_back(
          applicantByIdOrFail(I, "a" + num(j + 1) + "_" + num(static_cast<int>(l))),
          mask[j] ? houseByIdOrFail(I, "x" + num(static_cast<int>(l)))
                  : houseByIdOrFail(I, "w" + num(j + 1)));

  Matching M = makeMatching(applyChange(I, r), std::move(edges));
  return {std::move(r), std::move(M)};
}

// --- round-trip validation ---------------------------------------------------

namespace {

bool popularMatchingExistsByEnumeration(const Instance& I, PopularityNotion notion,
                                        long long limit) {
  bool found = false;
  forEachMatching(I, limit, [&](const Matching& M) {
    // Popular matchings are maximal: an unsaturated applicant beside a house
    // with a free slot flips the vote on her own.
    if (!isMaximal(I, M)) return true;
    if (isPopularBruteForce(I, M, notion, limit).popular) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

void checkPopPerfectWitness(const Instance& I, const CapacityChange& r, const Matching& M) {
  const Instance changed = applyChange(I, r);
  validateMatching(changed, M);
  if (!isPerfect(changed, M))
    fail(ErrorKind::Internal, "prescribed witness matching is not perfect");
  if (!isPopularCHA(changed, M).popular)
    fail(ErrorKind::Internal, "prescribed witness matching is not popular");
}

}  // namespace

ValidationReport validateReduction(const ThreeDMInstance& t, Construction construction,
                                   long long limit) {
  validateThreeDM(t);
  const auto cover = oracleExactCover(t);
  ValidationReport report;
  report.sourceAnswer = cover.has_value();

  switch (construction) {
    case Construction::PmcapTraditional: {
      const Instance I = reduce3dmToPmcapTraditional(t);
      report.targetAnswer =
          popularMatchingExistsByEnumeration(I, PopularityNotion::Traditional, limit);
      if (cover) {
        const Matching W = pmcapTraditionalWitness(t, I, *cover);
        if (!isPopularBruteForce(I, W, PopularityNotion::Traditional, limit).popular)
          fail(ErrorKind::Internal, "prescribed traditional witness is not popular");
      }
      report.agree = report.sourceAnswer == report.targetAnswer;
      report.details = "popular matching existence by full enumeration";
      break;
    }
    case Construction::PmcapLex: {
      const Instance I = reduce3dmToPmcapLex(t);
      if (cover) {
        const Matching W = pmcapLexWitness(t, I, *cover);
        report.targetAnswer = !findLexDominator(I, W).has_value();
        report.agree = report.targetAnswer;
        report.details = "forward direction: prescribed matching survived the dominance scan";
      } else {
        report.targetAnswer = false;
        report.agree = true;
        report.details = "no cover; forward direction vacuous";
      }
      break;
    }
    case Construction::MinSumDec: {
      const auto [I, budget] = reduce3dmToMinSumDec(t);
      const auto res = minSumPopPerfectExact(I, budget, /*allowDecrease=*/true);
      report.targetAnswer = res.has_value();
      if (cover) {
        const auto [r, M] = minSumDecWitness(t, I, *cover);
        checkPopPerfectWitness(I, r, M);
        if (r.l1() > budget) fail(ErrorKind::Internal, "prescribed vector exceeds the budget");
      }
      report.agree = report.sourceAnswer == report.targetAnswer;
      report.details = "exact search within budget " + num(static_cast<int>(budget));
      break;
    }
    case Construction::MinMaxDec1:
    case Construction::MinMaxInc2: {
      const auto variant = construction == Construction::MinMaxDec1
                               ? MinMaxVariant::DecreaseK1
                               : MinMaxVariant::IncreaseK2;
      const auto [I, kTarget] = reduce3dmToMinMax(t, variant);
      const auto res =
          minMaxPopPerfectExact(I, kTarget, variant == MinMaxVariant::DecreaseK1);
      report.targetAnswer = res.has_value();
      if (cover) {
        const auto [r, M] = minMaxWitness(t, I, variant, *cover);
        checkPopPerfectWitness(I, r, M);
        if (r.linf() > kTarget) fail(ErrorKind::Internal, "prescribed vector exceeds kTarget");
      }
      report.agree = report.sourceAnswer == report.targetAnswer;
      report.details = "exact search up to max change " + num(kTarget);
      break;
    }
    case Construction::SetCoverMinMax:
      fail(ErrorKind::Contract, "set-cover construction takes a set-cover instance");
  }
  return report;
}

ValidationReport validateReduction(const SetCoverInstance& s, std::optional<long long> nScale,
                                   long long guard) {
  const SetCoverSolution sol = oracleSetCover(s, guard);
  const Instance I = reduceSetCoverToMinMax(s, nScale);
  const auto [r, M] = setCoverWitness(s, I, sol.cover, nScale);

  ValidationReport report;
  report.sourceAnswer = true;  // a valid instance always has a cover
  checkPopPerfectWitness(I, r, M);
  const Instance changed = applyChange(I, r);
  report.targetAnswer = existsPerfectPopular(changed).exists;
  report.agree = report.targetAnswer;
  report.details = "prescribed vector of max change " + num(sol.optCost) +
                   " yields a perfect popular matching";
  return report;
}

}  // namespace mm
