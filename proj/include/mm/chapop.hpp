#pragma once

#include <optional>
#include <vector>

#include "mm/instance.hpp"

namespace mm {

/// First/second-choice structure underlying the popularity characterization
/// for unit applicant capacities. f(a) is the top choice; s(a) equals f(a)
/// when the top choice has at most as many admirers as capacity, otherwise
/// the best house with strictly fewer admirers than capacity (possibly none).
struct ReducedGraph {
  std::vector<int> firstChoice;                 // f(a), -1 for empty preference lists
  std::vector<std::optional<int>> secondChoice; // s(a)
  std::vector<std::vector<int>> admirers;       // per house, applicant indices ascending
  std::vector<char> saturableByAdmirers;        // |admirers(h)| >= q^H[h]
  std::vector<char> subAdmired;                 // |admirers(h)| <= q^H[h]
};

ReducedGraph buildReducedGraph(const Instance& I);

struct CHACheck {
  bool popular = false;
  std::optional<int> failedCondition;  // 1..4, first violated
};

/// Four-condition popularity characterization; unit applicant capacities.
CHACheck isPopularCHA(const Instance& I, const Matching& M);

std::optional<Matching> findPopularCHA(const Instance& I);

struct PerfectPopularResult {
  bool exists = false;
  std::optional<Matching> matching;
};

PerfectPopularResult existsPerfectPopular(const Instance& I);

/// Size of a maximum matching in the reduced graph saturating every
/// admirer-saturable house with admirers only and giving every sub-admired
/// house all of its admirers.
int maxConditionedMatchingSize(const Instance& I);

namespace detail {
/// The fix-then-weight solve shared by the operations above.
Matching conditionedMaxMatching(const Instance& I, const ReducedGraph& rg);
}  // namespace detail

}  // namespace mm
