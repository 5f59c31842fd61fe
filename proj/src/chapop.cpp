#include "mm/chapop.hpp"

#include <algorithm>

#include "mm/engine.hpp"

namespace mm {

namespace {

void requireUnitApplicants(const Instance& I, const char* what) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, std::string(what) + " requires unit applicant capacities");
}

}  // namespace

ReducedGraph buildReducedGraph(const Instance& I) {
  requireUnitApplicants(I, "the popularity characterization");
  const int n = I.numApplicants();
  const int m = I.numHouses();

  ReducedGraph rg;
  rg.firstChoice.assign(n, -1);
  rg.secondChoice.assign(n, std::nullopt);
  rg.admirers.assign(m, {});
  for (int a = 0; a < n; ++a) {
    const auto& prefs = I.applicant(a).prefs;
    if (prefs.empty()) continue;
    rg.firstChoice[a] = prefs[0];
    rg.admirers[prefs[0]].push_back(a);
  }
  rg.saturableByAdmirers.assign(m, 0);
  rg.subAdmired.assign(m, 0);
  for (int h = 0; h < m; ++h) {
    const int adm = static_cast<int>(rg.admirers[h].size());
    rg.saturableByAdmirers[h] = adm >= I.houseCapacity(h);
    rg.subAdmired[h] = adm <= I.houseCapacity(h);
  }
  for (int a = 0; a < n; ++a) {
    const int f = rg.firstChoice[a];
    if (f < 0) continue;
    if (static_cast<int>(rg.admirers[f].size()) <= I.houseCapacity(f)) {
      rg.secondChoice[a] = f;
      continue;
    }
    for (int h : I.applicant(a).prefs) {
      if (static_cast<int>(rg.admirers[h].size()) < I.houseCapacity(h)) {
        rg.secondChoice[a] = h;
        break;
      }
    }
    // Structural consequence: any s-edge into a house with more admirers than
    // capacity is impossible, so every reduced-graph edge into such a house
    // comes from an admirer.
    if (rg.secondChoice[a] && *rg.secondChoice[a] != f &&
        static_cast<int>(rg.admirers[*rg.secondChoice[a]].size()) >=
            I.houseCapacity(*rg.secondChoice[a]))
      fail(ErrorKind::Internal, "second choice points at an over-admired house");
  }
  return rg;
}

CHACheck isPopularCHA(const Instance& I, const Matching& M) {
  requireUnitApplicants(I, "the popularity characterization");
  validateMatching(I, M);
  const ReducedGraph rg = buildReducedGraph(I);

  std::vector<int> assigned(I.numApplicants(), -1);
  for (const auto& [a, h] : M.edges) assigned[a] = h;
  const std::vector<int> load = houseLoad(I, M);

  // 1: every matched edge lies in the reduced graph
  for (const auto& [a, h] : M.edges) {
    const bool inG = h == rg.firstChoice[a] ||
                     (rg.secondChoice[a] && h == *rg.secondChoice[a]);
    if (!inG) return {false, 1};
  }
  // 2: every applicant with a second choice is matched
  for (int a = 0; a < I.numApplicants(); ++a)
    if (rg.secondChoice[a] && assigned[a] == -1) return {false, 2};
  // 3: admirer-saturable houses are saturated, and only by admirers
  for (int h = 0; h < I.numHouses(); ++h) {
    if (!rg.saturableByAdmirers[h]) continue;
    if (load[h] != I.houseCapacity(h)) return {false, 3};
    for (const auto& [a, hh] : M.edges)
      if (hh == h && rg.firstChoice[a] != h) return {false, 3};
  }
  // 4: sub-admired houses hold all of their admirers
  for (int h = 0; h < I.numHouses(); ++h) {
    if (!rg.subAdmired[h]) continue;
    for (int a : rg.admirers[h])
      if (assigned[a] != h) return {false, 4};
  }
  return {true, std::nullopt};
}

namespace detail {

Matching conditionedMaxMatching(const Instance& I, const ReducedGraph& rg) {
  engine::WeightedBipartiteProblem p;
  p.numLeft = I.numApplicants();
  p.rightCapacity.resize(I.numHouses());
  for (int h = 0; h < I.numHouses(); ++h) p.rightCapacity[h] = I.houseCapacity(h);

  // Candidate edges: f-edges then the distinct s-edges, per applicant.
  std::vector<int> fEdgeIdx(I.numApplicants(), -1);
  for (int a = 0; a < I.numApplicants(); ++a) {
    const int f = rg.firstChoice[a];
    if (f < 0) continue;
    fEdgeIdx[a] = static_cast<int>(p.edges.size());
    p.edges.push_back({a, f, rg.saturableByAdmirers[f] ? 1LL : 0LL});
    if (rg.secondChoice[a] && *rg.secondChoice[a] != f)
      p.edges.push_back({a, *rg.secondChoice[a], 0});
  }
  for (int h = 0; h < I.numHouses(); ++h) {
    if (rg.subAdmired[h])
      for (int a : rg.admirers[h]) p.fixedEdges.push_back(fEdgeIdx[a]);
    if (rg.saturableByAdmirers[h]) p.saturatedRight.push_back(h);
  }

  auto outcome = engine::maxSizeMaxWeightMatching(p);
  auto* sol = std::get_if<engine::MatchingSolution>(&outcome);
  if (!sol)
    fail(ErrorKind::Internal, "conditioned matching saturation is always feasible");

  std::vector<std::pair<int, int>> edges;
  for (int e : sol->chosenEdges) edges.emplace_back(p.edges[e].left, p.edges[e].right);
  Matching M = makeMatching(I, std::move(edges));

  // Both conditions hold by construction; keep them checked.
  const std::vector<int> load = houseLoad(I, M);
  std::vector<int> assigned(I.numApplicants(), -1);
  for (const auto& [a, h] : M.edges) assigned[a] = h;
  for (int h = 0; h < I.numHouses(); ++h) {
    if (rg.saturableByAdmirers[h] && load[h] != I.houseCapacity(h))
      fail(ErrorKind::Internal, "conditioned matching left a saturable house unsaturated");
    if (rg.subAdmired[h])
      for (int a : rg.admirers[h])
        if (assigned[a] != h)
          fail(ErrorKind::Internal, "conditioned matching dropped an admirer edge");
  }
  return M;
}

}  // namespace detail

std::optional<Matching> findPopularCHA(const Instance& I) {
  requireUnitApplicants(I, "popular matching construction");
  const ReducedGraph rg = buildReducedGraph(I);
  Matching M = detail::conditionedMaxMatching(I, rg);
  std::vector<int> assigned(I.numApplicants(), -1);
  for (const auto& [a, h] : M.edges) assigned[a] = h;
  for (int a = 0; a < I.numApplicants(); ++a)
    if (rg.secondChoice[a] && assigned[a] == -1) return std::nullopt;
  if (!isPopularCHA(I, M).popular)
    fail(ErrorKind::Internal, "constructed matching fails the popularity characterization");
  return M;
}

PerfectPopularResult existsPerfectPopular(const Instance& I) {
  requireUnitApplicants(I, "perfect popular existence");
  const ReducedGraph rg = buildReducedGraph(I);
  Matching M = detail::conditionedMaxMatching(I, rg);
  if (static_cast<int>(M.edges.size()) != I.numApplicants()) return {false, std::nullopt};
  if (!isPopularCHA(I, M).popular || !isPerfect(I, M))
    fail(ErrorKind::Internal, "perfect conditioned matching fails its property checks");
  return {true, std::move(M)};
}

int maxConditionedMatchingSize(const Instance& I) {
  requireUnitApplicants(I, "conditioned matching size");
  const ReducedGraph rg = buildReducedGraph(I);
  return static_cast<int>(detail::conditionedMaxMatching(I, rg).edges.size());
}

}  // namespace mm
