#pragma once

#include <vector>

namespace partlayers {

/// Published (s, t, dim_loc) for one partition.
struct CapacityReferenceRow {
    int n = 0;
    std::vector<int> parts;
    int s = 0;
    int t = 0;
    int dim_loc = 0;
};

/// Every partition of n <= 7 with its published capacities, in enumeration
/// order.
const std::vector<CapacityReferenceRow>& small_capacity_reference();

/// Published first-occurrence data for one layer value.
struct FirstOccurrenceReference {
    int r = 0;
    int n_first = 0;
    int size = 0;
    std::vector<std::vector<int>> representatives; ///< up to conjugation
    bool exact = false;                             ///< proven, not only computed
};

/// Layer values 0..7. Rows 0..3 are exact; 4..7 are finite-range
/// computations up to n = 29.
const std::vector<FirstOccurrenceReference>& first_occurrence_reference();

/// The exact first-occurrence sets F_0..F_3.
const std::vector<std::vector<std::vector<int>>>& exact_first_occurrence_sets();

} // namespace partlayers
