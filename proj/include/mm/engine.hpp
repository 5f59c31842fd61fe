#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "mm/error.hpp"

namespace mm::engine {

struct BipartiteEdge {
  int left;
  int right;
  long long weight;
};

/// Capacitated bipartite matching problem: unit-supply left nodes, right
/// nodes with integer capacities. `fixedEdges` must appear in any solution;
/// every node in `saturatedRight` must end with degree equal to its capacity.
struct WeightedBipartiteProblem {
  int numLeft = 0;
  std::vector<int> rightCapacity;
  std::vector<BipartiteEdge> edges;      // declaration order drives all tie-breaks
  std::vector<int> fixedEdges;           // indices into edges
  std::vector<int> saturatedRight;       // right node indices
};

struct MatchingSolution {
  std::vector<int> chosenEdges;  // indices into edges, ascending
  int size = 0;
  long long weight = 0;
};

struct SaturationInfeasible {
  int rightNode;  // first (declaration order) right node left unsaturated
  int achieved;
  int required;
};

using MatchingOutcome = std::variant<MatchingSolution, SaturationInfeasible>;

/// Maximum cardinality first, maximum total weight second, among all
/// solutions containing fixedEdges and meeting the saturation requirements.
/// Exact integer arithmetic throughout; fully deterministic.
MatchingOutcome maxSizeMaxWeightMatching(const WeightedBipartiteProblem& p);

struct Arc {
  int from;
  int to;
  long long weight;
};

struct DirectedWeightedGraph {
  int numNodes = 0;
  std::vector<Arc> arcs;  // parallel arcs permitted, no self-loops
};

struct ShortestPathResult {
  std::vector<long long> dist;  // valid where reached[v]
  std::vector<char> reached;
  std::vector<int> predArc;     // arc entering v on a shortest path; -1 at sources
};

struct NegativeCycle {
  std::vector<int> arcs;  // in traversal order
  long long totalWeight;  // < 0
};

using PathsOutcome = std::variant<ShortestPathResult, NegativeCycle>;

/// Bellman-Ford from a source set. Reports one negative-total-weight cycle
/// reachable from the sources if any exists, otherwise exact distances and a
/// predecessor structure. Arcs are relaxed in declaration order.
PathsOutcome shortestPathsOrNegativeCycle(const DirectedWeightedGraph& g,
                                          const std::vector<int>& sources);

}  // namespace mm::engine
