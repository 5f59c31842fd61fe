#pragma once

#include "mm/instance.hpp"

namespace mm {

/// Maximum-cardinality matching minimizing the total preference rank among
/// maximum-cardinality matchings; such a matching is Pareto-optimal.
/// Unit applicant capacities only.
Matching findParetoMax(const Instance& I);

/// Unweighted maximum matching cardinality; unit applicant capacities.
int maxMatchingSize(const Instance& I);

}  // namespace mm
