#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mm/instance.hpp"

namespace mm {

/// Restricted three-dimensional matching: elements A, B, C of size nHat each,
/// triples as 1-based (a, b, c) index tuples. In strict mode there are exactly
/// 3*nHat triples and every element occurs in exactly 3 of them; relaxed mode
/// drops both occurrence constraints.
struct ThreeDMInstance {
  int nHat = 0;
  std::vector<std::array<int, 3>> triples;
  bool strict = true;
};

void validateThreeDM(const ThreeDMInstance& t);
ThreeDMInstance parseThreeDM(const std::string& text);
std::string serializeThreeDM(const ThreeDMInstance& t);

struct SetCoverInstance {
  int nElements = 0;
  std::vector<std::vector<int>> sets;  // 1-based element indices
  int k = 0;
};

void validateSetCover(const SetCoverInstance& s);
SetCoverInstance parseSetCover(const std::string& text);
std::string serializeSetCover(const SetCoverInstance& s);

/// Canonically-first exact 3-cover (triple indices, 0-based ascending).
std::optional<std::vector<int>> oracleExactCover(const ThreeDMInstance& t);

struct SetCoverSolution {
  int optCost = 0;
  std::vector<int> cover;  // set indices, 0-based ascending
};

/// Exhaustive minimum cover, by increasing size then lexicographic order.
SetCoverSolution oracleSetCover(const SetCoverInstance& s, long long guard = 10'000'000);

// --- hardness-reduction generators -----------------------------------------

/// Capacitated-applicant popular matching, traditional notion: one capacity-3
/// applicant per triple ranking its c-, b-, a-type houses in that order.
Instance reduce3dmToPmcapTraditional(const ThreeDMInstance& t);

/// Capacitated-applicant popular matching, lexicographic notion: three
/// capacity-2 applicants plus a private 3-cycle of houses per triple.
Instance reduce3dmToPmcapLex(const ThreeDMInstance& t);

struct MinSumDecReduction {
  Instance instance;
  long long budget = 0;  // 2 * nHat
};

/// Minimum-L1 capacity change with decreases allowed.
MinSumDecReduction reduce3dmToMinSumDec(const ThreeDMInstance& t);

enum class MinMaxVariant { DecreaseK1, IncreaseK2 };

struct MinMaxReduction {
  Instance instance;
  int kTarget = 0;
};

/// Minimum-Linf capacity change; the IncreaseK2 collector house has capacity
/// 2*nHat-2, which is 0 at nHat=1 (such instances stay internal - the file
/// parser rejects zero capacities).
MinMaxReduction reduce3dmToMinMax(const ThreeDMInstance& t, MinMaxVariant variant);

/// Inapproximability construction for minimum-Linf; nScale overrides the
/// default replication factor N = nElements^2 * numSets for desk-scale runs.
Instance reduceSetCoverToMinMax(const SetCoverInstance& s,
                                std::optional<long long> nScale = std::nullopt);

// --- prescribed forward witnesses (as constructed in the iff arguments) ----

Matching pmcapTraditionalWitness(const ThreeDMInstance& t, const Instance& I,
                                 const std::vector<int>& cover);
Matching pmcapLexWitness(const ThreeDMInstance& t, const Instance& I,
                         const std::vector<int>& cover);
std::pair<CapacityChange, Matching> minSumDecWitness(const ThreeDMInstance& t, const Instance& I,
                                                     const std::vector<int>& cover);
std::pair<CapacityChange, Matching> minMaxWitness(const ThreeDMInstance& t, const Instance& I,
                                                  MinMaxVariant variant,
                                                  const std::vector<int>& cover);
std::pair<CapacityChange, Matching> setCoverWitness(const SetCoverInstance& s, const Instance& I,
                                                    const std::vector<int>& cover,
                                                    std::optional<long long> nScale);

enum class Construction {
  PmcapTraditional,
  PmcapLex,
  MinSumDec,
  MinMaxDec1,
  MinMaxInc2,
  SetCoverMinMax,
};

struct ValidationReport {
  bool sourceAnswer = false;
  bool targetAnswer = false;
  bool agree = false;
  std::string details;
};

/// Empirically checks the construction's iff-claim at desk scale.
/// Forward direction additionally builds the prescribed witness and asserts
/// it passes the relevant popularity/perfectness checks; the lexicographic
/// construction is validated forward-only (dominance scan).
ValidationReport validateReduction(const ThreeDMInstance& t, Construction construction,
                                   long long limit = 5'000'000);
ValidationReport validateReduction(const SetCoverInstance& s,
                                   std::optional<long long> nScale = std::nullopt,
                                   long long guard = 10'000'000);

}  // namespace mm
