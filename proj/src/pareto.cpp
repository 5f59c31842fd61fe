#include "mm/pareto.hpp"

#include "mm/engine.hpp"

namespace mm {

namespace {

engine::WeightedBipartiteProblem acceptabilityProblem(const Instance& I) {
  engine::WeightedBipartiteProblem p;
  p.numLeft = I.numApplicants();
  p.rightCapacity.resize(I.numHouses());
  for (int h = 0; h < I.numHouses(); ++h) p.rightCapacity[h] = I.houseCapacity(h);
  for (const auto& [a, h] : I.edges()) p.edges.push_back({a, h, 0});
  return p;
}

}  // namespace

Matching findParetoMax(const Instance& I) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported,
         "Pareto-optimal construction requires unit applicant capacities");
  engine::WeightedBipartiteProblem p = acceptabilityProblem(I);
  for (auto& e : p.edges) e.weight = -static_cast<long long>(*I.rankOf(e.left, e.right));
  auto outcome = engine::maxSizeMaxWeightMatching(p);
  const auto& sol = std::get<engine::MatchingSolution>(outcome);
  std::vector<std::pair<int, int>> edges;
  for (int e : sol.chosenEdges) edges.emplace_back(p.edges[e].left, p.edges[e].right);
  return makeMatching(I, std::move(edges));
}

int maxMatchingSize(const Instance& I) {
  if (!I.applicantsUnit())
    fail(ErrorKind::Unsupported, "maximum matching size requires unit applicant capacities");
  auto outcome = engine::maxSizeMaxWeightMatching(acceptabilityProblem(I));
  return std::get<engine::MatchingSolution>(outcome).size;
}

}  // namespace mm
