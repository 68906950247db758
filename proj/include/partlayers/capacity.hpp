#pragma once

#include <functional>
#include <vector>

#include "partlayers/partition.hpp"

namespace partlayers {

struct CapacityRecord {
    Partition partition;
    int s = 0;       ///< star-capacity
    int t = 0;       ///< top-capacity
    int dim_loc = 0; ///< max(s, t)

    bool operator==(const CapacityRecord&) const = default;
};

/// Addable corners a for which lambda(c -> a) is admissible.
/// Throws std::invalid_argument if `c` is not a removable corner.
std::vector<Corner> a_max_set(const Partition& lambda, const Corner& c);

/// Removable corners c for which lambda(c -> a) is admissible.
/// Throws std::invalid_argument if `a` is not an addable corner.
std::vector<Corner> c_max_set(const Partition& lambda, const Corner& a);

int star_capacity(const Partition& lambda);
int top_capacity(const Partition& lambda);

/// Local simplex dimension, max(star_capacity, top_capacity).
int local_dim(const Partition& lambda);

/// Both capacities from one pass over the admissible transfers.
CapacityRecord capacity_record(const Partition& lambda);

/// Capacity source used by verification; swappable for fault injection.
using CapacityFn = std::function<CapacityRecord(const Partition&)>;

} // namespace partlayers
