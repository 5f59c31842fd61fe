#pragma once

#include <optional>

#include "mm/instance.hpp"

namespace mm {

struct OptimizationResult {
  enum class Certificate { PolyOptimal, ExhaustiveOptimal };

  CapacityChange change;
  Matching matching;   // feasible under q^H + change, perfect, property-checked
  long long cost = 0;  // L1 or Linf of change, per problem
  Certificate certificate = Certificate::PolyOptimal;
};

/// Minimum-total capacity increase admitting a perfect popular matching.
/// Unit applicant capacities. Polynomial; cost equals |A| minus the
/// conditioned maximum matching size.
OptimizationResult minSumPopPerfectIncrease(const Instance& I);

/// Exhaustive minimum-L1 capacity change (optionally with decreases) admitting
/// a perfect popular matching; candidates scanned in (cost, lexicographic)
/// order so reported optima are deterministic. Desk scale by design.
std::optional<OptimizationResult> minSumPopPerfectExact(const Instance& I, long long budget,
                                                        bool allowDecrease,
                                                        long long guard = 10'000'000);

/// Exhaustive minimum-Linf analogue; k is scanned upward to kBound.
std::optional<OptimizationResult> minMaxPopPerfectExact(const Instance& I, int kBound,
                                                        bool allowDecrease,
                                                        long long guard = 10'000'000);

/// Minimum-total capacity increase admitting a perfect Pareto-optimal
/// matching; cost is |A| minus the maximum matching size, and decreases
/// provably never help.
OptimizationResult minSumParetoPerfect(const Instance& I);

/// Smallest uniform raise admitting an applicant-perfect matching; the
/// reported delta is trimmed to actual per-house usage.
OptimizationResult minMaxParetoPerfect(const Instance& I);

}  // namespace mm
