#include "mm/instance.hpp"

#include <algorithm>
#include <unordered_map>

namespace mm {

namespace {

std::unordered_map<std::string, int> indexById(const std::vector<std::string>& ids,
                                               const char* what) {
  std::unordered_map<std::string, int> out;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) {
    if (ids[i].empty()) fail(ErrorKind::Validation, std::string(what) + " with empty id");
    if (!out.emplace(ids[i], i).second)
      fail(ErrorKind::Validation, std::string("duplicate ") + what + " id '" + ids[i] + "'");
  }
  return out;
}

}  // namespace

Instance::Instance(std::vector<ApplicantSpec> applicants, std::vector<HouseSpec> houses,
                   CapacityPolicy policy)
    : applicants_(std::move(applicants)), houses_(std::move(houses)) {
  std::vector<std::string> aIds, hIds;
  for (const auto& a : applicants_) aIds.push_back(a.id);
  for (const auto& h : houses_) hIds.push_back(h.id);
  indexById(aIds, "applicant");
  indexById(hIds, "house");

  const int m = numHouses();
  for (const auto& h : houses_) {
    const int minCap = policy == CapacityPolicy::AllowZeroHouse ? 0 : 1;
    if (h.capacity < minCap)
      fail(ErrorKind::Validation, "house '" + h.id + "' has capacity " +
                                      std::to_string(h.capacity) + ", must be >= " +
                                      std::to_string(minCap));
  }

  rank_.assign(applicants_.size(), std::vector<int>(m, 0));
  for (int a = 0; a < numApplicants(); ++a) {
    const auto& spec = applicants_[a];
    if (spec.capacity < 1)
      fail(ErrorKind::Validation,
           "applicant '" + spec.id + "' has capacity " + std::to_string(spec.capacity) +
               ", must be >= 1");
    for (size_t k = 0; k < spec.prefs.size(); ++k) {
      const int h = spec.prefs[k];
      if (h < 0 || h >= m)
        fail(ErrorKind::Validation,
             "applicant '" + spec.id + "' lists an unknown house (index " + std::to_string(h) +
                 ")");
      if (rank_[a][h] != 0)
        fail(ErrorKind::Validation,
             "duplicate house '" + houses_[h].id + "' in preference list of applicant '" +
                 spec.id + "'");
      rank_[a][h] = static_cast<int>(k) + 1;
    }
  }

  for (int a = 0; a < numApplicants(); ++a)
    for (int h = 0; h < m; ++h)
      if (rank_[a][h] != 0) edges_.emplace_back(a, h);
}

std::optional<int> Instance::applicantIndex(const std::string& id) const {
  for (int a = 0; a < numApplicants(); ++a)
    if (applicants_[a].id == id) return a;
  return std::nullopt;
}

std::optional<int> Instance::houseIndex(const std::string& id) const {
  for (int h = 0; h < numHouses(); ++h)
    if (houses_[h].id == id) return h;
  return std::nullopt;
}

std::optional<int> Instance::rankOf(int a, int h) const {
  const int r = rank_[a][h];
  if (r == 0) return std::nullopt;
  return r;
}

bool Instance::prefers(int a, int h1, int h2) const {
  const int r1 = rank_[a][h1];
  const int r2 = rank_[a][h2];
  if (r1 == 0 || r2 == 0)
    fail(ErrorKind::Contract, "prefers() called with a house unacceptable to applicant '" +
                                  applicants_[a].id + "'");
  return r1 < r2;
}

bool Instance::applicantsUnit() const {
  return std::all_of(applicants_.begin(), applicants_.end(),
                     [](const ApplicantSpec& a) { return a.capacity == 1; });
}

bool Instance::housesUnit() const {
  return std::all_of(houses_.begin(), houses_.end(),
                     [](const HouseSpec& h) { return h.capacity == 1; });
}

Instance Instance::withHouseCapacities(std::vector<int> caps) const {
  if (static_cast<int>(caps.size()) != numHouses())
    fail(ErrorKind::Contract, "capacity vector length mismatch");
  std::vector<HouseSpec> houses = houses_;
  for (int h = 0; h < numHouses(); ++h) houses[h].capacity = caps[h];
  return Instance(applicants_, houses, CapacityPolicy::AllowZeroHouse);
}

void validateMatching(const Instance& I, const Matching& M) {
  std::vector<int> aDeg(I.numApplicants(), 0), hDeg(I.numHouses(), 0);
  std::pair<int, int> prev{-1, -1};
  for (const auto& e : M.edges) {
    const auto [a, h] = e;
    if (a < 0 || a >= I.numApplicants() || h < 0 || h >= I.numHouses())
      fail(ErrorKind::Contract, "matching edge out of range");
    if (!(prev < e)) fail(ErrorKind::Contract, "matching edges not sorted or duplicated");
    prev = e;
    if (!I.acceptable(a, h))
      fail(ErrorKind::Contract, "matching edge (" + I.applicant(a).id + ", " + I.house(h).id +
                                    ") not in the acceptability relation");
    if (++aDeg[a] > I.applicantCapacity(a))
      fail(ErrorKind::Contract,
           "matching exceeds capacity of applicant '" + I.applicant(a).id + "'");
    if (++hDeg[h] > I.houseCapacity(h))
      fail(ErrorKind::Contract, "matching exceeds capacity of house '" + I.house(h).id + "'");
  }
}

Matching makeMatching(const Instance& I, std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  Matching M{std::move(edges)};
  validateMatching(I, M);
  return M;
}

std::vector<std::vector<int>> housesByApplicant(const Instance& I, const Matching& M) {
  std::vector<std::vector<int>> out(I.numApplicants());
  for (const auto& [a, h] : M.edges) out[a].push_back(h);
  return out;
}

std::vector<int> houseLoad(const Instance& I, const Matching& M) {
  std::vector<int> load(I.numHouses(), 0);
  for (const auto& [a, h] : M.edges) {
    (void)a;
    ++load[h];
  }
  return load;
}

bool isPerfect(const Instance& I, const Matching& M) {
  validateMatching(I, M);
  std::vector<int> deg(I.numApplicants(), 0);
  for (const auto& [a, h] : M.edges) {
    (void)h;
    ++deg[a];
  }
  for (int a = 0; a < I.numApplicants(); ++a)
    if (deg[a] != I.applicantCapacity(a)) return false;
  return true;
}

bool isMaximal(const Instance& I, const Matching& M) {
  std::vector<int> aDeg(I.numApplicants(), 0);
  std::vector<int> load = houseLoad(I, M);
  std::vector<std::vector<char>> in(I.numApplicants(),
                                    std::vector<char>(I.numHouses(), 0));
  for (const auto& [a, h] : M.edges) {
    ++aDeg[a];
    in[a][h] = 1;
  }
  for (const auto& [a, h] : I.edges())
    if (!in[a][h] && aDeg[a] < I.applicantCapacity(a) && load[h] < I.houseCapacity(h))
      return false;
  return true;
}

long long CapacityChange::l1() const {
  long long s = 0;
  for (int d : delta) s += d < 0 ? -static_cast<long long>(d) : d;
  return s;
}

int CapacityChange::linf() const {
  int s = 0;
  for (int d : delta) s = std::max(s, d < 0 ? -d : d);
  return s;
}

CapacityChange zeroChange(const Instance& I) {
  return CapacityChange{std::vector<int>(I.numHouses(), 0)};
}

Instance applyChange(const Instance& I, const CapacityChange& change) {
  if (static_cast<int>(change.delta.size()) != I.numHouses())
    fail(ErrorKind::Contract, "capacity change vector length mismatch");
  std::vector<int> caps(I.numHouses());
  for (int h = 0; h < I.numHouses(); ++h) {
    caps[h] = I.houseCapacity(h) + change.delta[h];
    if (caps[h] < 0)
      fail(ErrorKind::Validation, "capacity change drops house '" + I.house(h).id +
                                      "' below zero");
  }
  return I.withHouseCapacities(caps);
}

namespace {

struct MatchingEnumerator {
  const Instance& I;
  long long limit;
  const std::function<bool(const Matching&)>& visit;
  Matching current;
  std::vector<int> aDeg, hLoad;
  long long count = 0;
  bool stopped = false;

  MatchingEnumerator(const Instance& inst, long long lim,
                     const std::function<bool(const Matching&)>& v)
      : I(inst), limit(lim), visit(v), aDeg(inst.numApplicants(), 0),
        hLoad(inst.numHouses(), 0) {}

  void emit() {
    if (++count > limit) fail(ErrorKind::TooLarge, "instance too large for enumeration");
    if (!visit(current)) stopped = true;
  }

  // Preorder over "next edge index" choices yields lexicographic order.
  void recurse(size_t nextEdge) {
    const auto& edges = I.edges();
    for (size_t k = nextEdge; k < edges.size() && !stopped; ++k) {
      const auto [a, h] = edges[k];
      if (aDeg[a] >= I.applicantCapacity(a) || hLoad[h] >= I.houseCapacity(h)) continue;
      ++aDeg[a];
      ++hLoad[h];
      current.edges.push_back(edges[k]);
      emit();
      if (!stopped) recurse(k + 1);
      current.edges.pop_back();
      --aDeg[a];
      --hLoad[h];
    }
  }
};

}  // namespace

long long forEachMatching(const Instance& I, long long limit,
                          const std::function<bool(const Matching&)>& visit) {
  if (limit <= 0) fail(ErrorKind::Contract, "enumeration limit must be positive");
  MatchingEnumerator e(I, limit, visit);
  e.emit();  // the empty matching
  if (!e.stopped) e.recurse(0);
  return e.count;
}

std::vector<Matching> enumerateMatchings(const Instance& I, long long limit) {
  std::vector<Matching> out;
  forEachMatching(I, limit, [&](const Matching& M) {
    out.push_back(M);
    return true;
  });
  return out;
}

}  // namespace mm
