#include "mm/popverify.hpp"

#include <algorithm>

#include "mm/engine.hpp"
#include "mm/votes.hpp"

namespace mm {

AuxiliaryGraph buildAuxiliaryGraph(const Instance& I, const Matching& M) {
  if (!I.housesUnit())
    fail(ErrorKind::Unsupported,
         "the polynomial popularity verifier requires unit house capacities");
  validateMatching(I, M);

  AuxiliaryGraph g;
  g.numHouses = I.numHouses();
  g.copyOffset.resize(I.numApplicants());
  for (int a = 0; a < I.numApplicants(); ++a) {
    g.copyOffset[a] = g.numCopies;
    g.numCopies += I.applicantCapacity(a);
  }
  g.matchedEdgeOfCopy.assign(g.numCopies, std::nullopt);
  g.matchedCopyOfHouse.assign(g.numHouses, -1);

  // Edge k of M(a) in preference order goes to copy a^k.
  const auto housesM = housesByApplicant(I, M);
  for (int a = 0; a < I.numApplicants(); ++a) {
    std::vector<int> mine = housesM[a];
    std::sort(mine.begin(), mine.end(),
              [&](int h1, int h2) { return *I.rankOf(a, h1) < *I.rankOf(a, h2); });
    for (size_t k = 0; k < mine.size(); ++k) {
      const int copy = g.copyOffset[a] + static_cast<int>(k);
      g.matchedEdgeOfCopy[copy] = std::make_pair(a, mine[k]);
      g.matchedCopyOfHouse[mine[k]] = copy;
    }
  }

  // Matching arcs copy->house, weight 0 (an edge's vote against itself).
  for (int c = 0; c < g.numCopies; ++c) {
    if (!g.matchedEdgeOfCopy[c]) continue;
    const auto [a, h] = *g.matchedEdgeOfCopy[c];
    g.arcs.push_back({g.copyNode(c), g.houseNode(h), 0, true, a, c, h});
  }

  // Non-matching arcs house->copy, one per copy, weighted by the single-edge
  // vote of the copy's matched edge (if any) against the new edge.
  std::vector<std::vector<char>> inM(I.numApplicants(), std::vector<char>(I.numHouses(), 0));
  for (const auto& [a, h] : M.edges) inM[a][h] = 1;
  for (int a = 0; a < I.numApplicants(); ++a) {
    for (int h : I.applicant(a).prefs) {
      if (inM[a][h]) continue;
      for (int k = 0; k < I.applicantCapacity(a); ++k) {
        const int copy = g.copyOffset[a] + k;
        int w;
        if (!g.matchedEdgeOfCopy[copy]) {
          w = -1;  // gaining an edge from nothing
        } else {
          const int held = g.matchedEdgeOfCopy[copy]->second;
          w = I.prefers(a, held, h) ? 1 : -1;
        }
        g.arcs.push_back({g.houseNode(h), g.copyNode(copy), w, false, a, copy, h});
      }
    }
  }
  return g;
}

namespace {

Matching inducedMatchingOfArcs(const Instance& I, const Matching& M,
                               const std::vector<AuxiliaryGraph::Arc>& arcs) {
  std::vector<std::pair<int, int>> edges = M.edges;
  for (const auto& arc : arcs) {
    const std::pair<int, int> e{arc.applicant, arc.house};
    if (arc.matching) {
      const auto it = std::find(edges.begin(), edges.end(), e);
      if (it == edges.end())
        fail(ErrorKind::Internal, "witness removes an edge that is not matched");
      edges.erase(it);
    } else {
      edges.push_back(e);
    }
  }
  return makeMatching(I, std::move(edges));  // throws Contract if infeasible
}

}  // namespace

VerifyResult verifyPopularPoly(const Instance& I, const Matching& M, VerifyOptions opts) {
  const AuxiliaryGraph aux = buildAuxiliaryGraph(I, M);

  engine::DirectedWeightedGraph g;
  g.numNodes = aux.numNodes();
  for (const auto& arc : aux.arcs) g.arcs.push_back({arc.from, arc.to, arc.weight});

  // Path starts. Matched copies start paths that drop their edge unpaired,
  // which costs the dominator +1; unsaturated houses start paths that hand
  // out a free slot. Every alternating cycle passes through a matched copy,
  // so one search over all starts also settles cycle existence.
  struct Start {
    int node;
    long long bonus;
    int applicant;  // owning applicant for copy starts, -1 otherwise
  };
  std::vector<Start> starts;
  for (int h = 0; h < aux.numHouses; ++h) {
    const bool saturated = aux.matchedCopyOfHouse[h] != -1;
    if (!saturated || opts.paperLiteralMod) starts.push_back({aux.houseNode(h), 0, -1});
  }
  for (int c = 0; c < aux.numCopies; ++c)
    if (aux.matchedEdgeOfCopy[c])
      starts.push_back({aux.copyNode(c), 1, aux.matchedEdgeOfCopy[c]->first});

  std::vector<int> allStartNodes;
  for (const auto& s : starts) allStartNodes.push_back(s.node);
  if (allStartNodes.empty()) return {true, std::nullopt};

  auto combined = engine::shortestPathsOrNegativeCycle(g, allStartNodes);
  if (auto* cycle = std::get_if<engine::NegativeCycle>(&combined)) {
    DominationWitness w;
    w.kind = DominationWitness::Kind::Cycle;
    for (int arcIdx : cycle->arcs) w.arcs.push_back(aux.arcs[arcIdx]);
    w.score = cycle->totalWeight;
    w.inducedMatching = inducedMatchingOfArcs(I, M, w.arcs);
    const auto vote = totalVote(I, M, w.inducedMatching, PopularityNotion::Traditional);
    if (vote.total >= 0 || vote.total > w.score)
      fail(ErrorKind::Internal, "negative cycle witness fails the vote check");
    return {false, std::move(w)};
  }

  // No negative cycle: search per start class. A path between two copies of
  // the same applicant would force its unpaired loss and unpaired gain into
  // one pair of the applicant's vote, so its additive score is wrong; such
  // paths never occur in the decomposition of a dominating matching and are
  // skipped.
  long long bestScore = 0;
  int bestStart = -1, bestEnd = -1;
  auto considerEnds = [&](const Start& s, const engine::ShortestPathResult& sp,
                          int startOrd) {
    auto consider = [&](int node, long long score) {
      if (score < bestScore) {
        bestScore = score;
        bestStart = startOrd;
        bestEnd = node;
      }
    };
    for (int h = 0; h < aux.numHouses; ++h) {
      const int node = aux.houseNode(h);
      // houses are only entered through their matching arc: feasible end
      if (sp.reached[node] && sp.predArc[node] >= 0) consider(node, s.bonus + sp.dist[node]);
    }
    for (int c = 0; c < aux.numCopies; ++c) {
      const int node = aux.copyNode(c);
      if (!sp.reached[node] || sp.predArc[node] < 0) continue;
      if (opts.paperLiteralMod) {
        consider(node, s.bonus + sp.dist[node] - 1);  // literal endpoint term
      } else if (!aux.matchedEdgeOfCopy[c] &&
                 s.applicant != aux.arcs[sp.predArc[node]].applicant) {
        consider(node, s.bonus + sp.dist[node]);
      }
    }
  };

  std::vector<engine::ShortestPathResult> perStart(starts.size());
  for (size_t k = 0; k < starts.size(); ++k) {
    auto outcome = engine::shortestPathsOrNegativeCycle(g, {starts[k].node});
    perStart[k] = std::get<engine::ShortestPathResult>(std::move(outcome));
    considerEnds(starts[k], perStart[k], static_cast<int>(k));
  }

  if (bestStart == -1) return {true, std::nullopt};

  DominationWitness w;
  w.kind = DominationWitness::Kind::Path;
  const auto& sp = perStart[bestStart];
  std::vector<AuxiliaryGraph::Arc> rev;
  for (int v = bestEnd; sp.predArc[v] >= 0; v = g.arcs[sp.predArc[v]].from)
    rev.push_back(aux.arcs[sp.predArc[v]]);
  w.arcs.assign(rev.rbegin(), rev.rend());
  w.score = bestScore;

  if (opts.paperLiteralMod) {
    // Diagnostic mode: the literal score may not correspond to a feasible
    // dominating matching; attach a witness only when it does.
    try {
      Matching induced = inducedMatchingOfArcs(I, M, w.arcs);
      if (totalVote(I, M, induced, PopularityNotion::Traditional).total < 0) {
        w.inducedMatching = std::move(induced);
        return {false, std::move(w)};
      }
    } catch (const Error&) {
    }
    return {false, std::nullopt};
  }

  w.inducedMatching = inducedMatchingOfArcs(I, M, w.arcs);
  const auto vote = totalVote(I, M, w.inducedMatching, PopularityNotion::Traditional);
  if (vote.total >= 0 || vote.total > w.score)
    fail(ErrorKind::Internal, "negative path witness fails the vote check");
  return {false, std::move(w)};
}

}  // namespace mm
