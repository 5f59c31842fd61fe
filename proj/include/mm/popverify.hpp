#pragma once

#include <optional>
#include <vector>

#include "mm/instance.hpp"

namespace mm {

/// Cloned, weighted, oriented graph used by the polynomial popularity
/// verifier (traditional notion, unit house capacities). Each applicant a
/// with capacity q becomes copies a^1..a^q; matching arcs point copy->house
/// with weight 0, non-matching arcs point house->copy weighted by the
/// single-edge vote against the copy's current assignment.
struct AuxiliaryGraph {
  struct Arc {
    int from;       // node index (houses first, then copies)
    int to;
    int weight;     // in {-1, 0, +1}
    bool matching;  // true: copy->house arc of the matched edge
    int applicant;
    int copy;       // global copy index
    int house;
  };

  int numHouses = 0;
  int numCopies = 0;
  std::vector<int> copyOffset;                              // per applicant
  std::vector<std::optional<std::pair<int, int>>> matchedEdgeOfCopy;  // copy -> (a, h)
  std::vector<int> matchedCopyOfHouse;                      // house -> copy index or -1
  std::vector<Arc> arcs;

  int houseNode(int h) const { return h; }
  int copyNode(int c) const { return numHouses + c; }
  int numNodes() const { return numHouses + numCopies; }
};

AuxiliaryGraph buildAuxiliaryGraph(const Instance& I, const Matching& M);

struct DominationWitness {
  enum class Kind { Cycle, Path };
  Kind kind;
  std::vector<AuxiliaryGraph::Arc> arcs;  // in traversal order
  long long score = 0;                    // < 0
  Matching inducedMatching;               // verified to dominate M
};

struct VerifyOptions {
  // Diagnostic: score paths with the uncorrected endpoint term (see README),
  // which double-counts gains at applicant endpoints. Never used by the
  // primary verification surface.
  bool paperLiteralMod = false;
};

struct VerifyResult {
  bool popular = false;
  std::optional<DominationWitness> witness;
};

/// Polynomial-time popularity verification for the traditional notion on
/// instances with unit house capacities. A returned witness has been
/// re-checked against totalVote; an inconsistent witness is a hard error.
VerifyResult verifyPopularPoly(const Instance& I, const Matching& M, VerifyOptions opts = {});

}  // namespace mm
