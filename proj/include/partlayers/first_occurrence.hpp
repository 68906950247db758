#pragma once

#include <optional>
#include <vector>

#include "partlayers/strata.hpp"

namespace partlayers {

/// First appearance of layer r across n = 1, 2, ...
struct FirstOccurrenceRecord {
    int r = 0;
    std::optional<int> n_first; ///< empty: not found for any n <= scanned_to
    int scanned_to = 0;
    std::vector<CapacityRecord> members; ///< F_r with (s, t), enumeration order
    bool staircase_match = false;
    bool conjugation_closed = false;

    bool found() const noexcept { return n_first.has_value(); }
    std::vector<Partition> member_partitions() const;
};

/// Scans n = 1..n_max once, sharing each layer assignment across all
/// r <= r_max. Stops early once every r has been found.
std::vector<FirstOccurrenceRecord> first_occurrence_scan(int r_max, int n_max, unsigned jobs = 1);

/// n_first == 1 + r(r+1)/2 and F_r == staircase_family(r) as sets.
/// Throws std::invalid_argument for a record that was not found.
bool check_staircase_pattern(const FirstOccurrenceRecord& record);

/// One member per conjugate pair (the lexicographically larger one), in
/// descending lexicographic order. Throws std::invalid_argument if `members`
/// is not closed under conjugation.
std::vector<Partition> representatives_up_to_conjugation(const std::vector<Partition>& members);

} // namespace partlayers
