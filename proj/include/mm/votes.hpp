#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mm/instance.hpp"

namespace mm {

/// Pairing between the houses an applicant holds only in S and only in T.
/// Feasible when it covers min(|S\T|, |T\S|) pairs and reuses no element.
using FeasiblePairing = std::vector<std::pair<int, int>>;  // (x in S\T, y in T\S)

struct VoteOutcome {
  std::vector<int> perApplicant;
  long long total = 0;
};

/// |{xy in N : x >_a y}| - |{xy in N : y >_a x}| + |S\T| - |T\S|.
/// S and T are house sets of applicant a; throws Contract when N is infeasible.
int pairingVote(const Instance& I, int a, const std::vector<int>& S, const std::vector<int>& T,
                const FeasiblePairing& N);

/// Worst pairing value: min over all feasible pairings. Exact; enumerated when
/// the smaller difference side has fewer than 6 elements, assignment-solved above.
int voteTraditional(const Instance& I, int a, const Matching& M, const Matching& M2);

/// 0 when equal sets; otherwise sign of where the best element of the
/// symmetric difference lies.
int voteLex(const Instance& I, int a, const Matching& M, const Matching& M2);

/// Sum of per-applicant votes; M2 dominates M iff total < 0.
VoteOutcome totalVote(const Instance& I, const Matching& M, const Matching& M2,
                      PopularityNotion notion);

struct PopularityCheck {
  bool popular = false;
  std::optional<Matching> witness;  // canonically first dominating matching
};

PopularityCheck isPopularBruteForce(const Instance& I, const Matching& M,
                                    PopularityNotion notion, long long limit);

/// Unit applicant capacities only (Unsupported otherwise).
PopularityCheck isParetoOptimalBruteForce(const Instance& I, const Matching& M, long long limit);

/// Exhaustive branch-and-bound search for a lexicographically dominating
/// matching. Complete (sound pruning only); the witness is the first found in
/// the deterministic search order, not the enumeration-canonical one.
std::optional<Matching> findLexDominator(const Instance& I, const Matching& M,
                                         long long nodeGuard = 200'000'000);

namespace detail {
int voteTraditionalOnSets(const Instance& I, int a, const std::vector<int>& S,
                          const std::vector<int>& T);
int worstPairingByEnumeration(const Instance& I, int a, const std::vector<int>& X,
                              const std::vector<int>& Y);
int worstPairingByAssignment(const Instance& I, int a, const std::vector<int>& X,
                             const std::vector<int>& Y);
}  // namespace detail

}  // namespace mm
