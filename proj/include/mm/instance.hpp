#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mm/error.hpp"

namespace mm {

enum class PopularityNotion { Traditional, Lexicographic };

struct ApplicantSpec {
  std::string id;
  int capacity = 1;
  std::vector<int> prefs;  // house indices, most preferred first; strict, no duplicates
};

struct HouseSpec {
  std::string id;
  int capacity = 1;
};

/// A many-to-one market: applicants with strict preference lists and
/// capacities on both sides. Immutable after construction; declaration order
/// is the canonical order for every deterministic tie-break in the library.
class Instance {
public:
  // Internal instances (capacity changes, reduction gadgets) may carry
  // zero-capacity houses; instances built from input documents may not.
  enum class CapacityPolicy { Positive, AllowZeroHouse };

  Instance(std::vector<ApplicantSpec> applicants, std::vector<HouseSpec> houses,
           CapacityPolicy policy = CapacityPolicy::Positive);

  int numApplicants() const { return static_cast<int>(applicants_.size()); }
  int numHouses() const { return static_cast<int>(houses_.size()); }
  const ApplicantSpec& applicant(int a) const { return applicants_[a]; }
  const HouseSpec& house(int h) const { return houses_[h]; }
  int applicantCapacity(int a) const { return applicants_[a].capacity; }
  int houseCapacity(int h) const { return houses_[h].capacity; }

  std::optional<int> applicantIndex(const std::string& id) const;
  std::optional<int> houseIndex(const std::string& id) const;

  /// 1-based preference rank of h for a; nullopt when unacceptable.
  std::optional<int> rankOf(int a, int h) const;
  bool acceptable(int a, int h) const { return rank_[a][h] != 0; }
  /// Strict comparison; both houses must be acceptable to a.
  bool prefers(int a, int h1, int h2) const;

  bool applicantsUnit() const;
  bool housesUnit() const;

  /// Acceptability edges in canonical order:
  /// (applicant declaration index, house declaration index), ascending.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Copy with replaced house capacities (entries may be 0 after decreases).
  Instance withHouseCapacities(std::vector<int> caps) const;

private:
  std::vector<ApplicantSpec> applicants_;
  std::vector<HouseSpec> houses_;
  std::vector<std::vector<int>> rank_;  // [a][h], 1-based, 0 = unacceptable
  std::vector<std::pair<int, int>> edges_;
};

/// Edge set, sorted by (applicant declaration index, house declaration index).
struct Matching {
  std::vector<std::pair<int, int>> edges;
  bool operator==(const Matching&) const = default;
};

/// Sorts, deduplicates-checks and validates feasibility against I.
Matching makeMatching(const Instance& I, std::vector<std::pair<int, int>> edges);
/// Throws Contract when M violates acceptability, capacities or sortedness.
void validateMatching(const Instance& I, const Matching& M);

std::vector<std::vector<int>> housesByApplicant(const Instance& I, const Matching& M);
std::vector<int> houseLoad(const Instance& I, const Matching& M);

bool isPerfect(const Instance& I, const Matching& M);
/// No acceptability edge can be added without violating a capacity.
bool isMaximal(const Instance& I, const Matching& M);

/// Per-house integer capacity deltas, indexed by house declaration order.
struct CapacityChange {
  std::vector<int> delta;

  long long l1() const;
  int linf() const;
};

CapacityChange zeroChange(const Instance& I);
/// Validates q^H + delta >= 0 componentwise, then applies.
Instance applyChange(const Instance& I, const CapacityChange& change);

/// Visits every feasible matching of I exactly once, in lexicographic order
/// over canonically sorted edge lists (the empty matching comes first).
/// The visitor may return false to stop early. Throws TooLarge once more than
/// `limit` matchings have been yielded. Returns the number visited.
long long forEachMatching(const Instance& I, long long limit,
                          const std::function<bool(const Matching&)>& visit);

std::vector<Matching> enumerateMatchings(const Instance& I, long long limit);

}  // namespace mm
