#pragma once

#include <chrono>
#include <vector>

#include "partlayers/capacity.hpp"
#include "partlayers/transfer_graph.hpp"

namespace partlayers {

struct OracleMismatch {
    Partition partition;
    int formula_dim = 0;
    int oracle_dim = 0;
};

struct OracleReport {
    int n = 0;
    std::size_t checked = 0;
    std::vector<OracleMismatch> mismatches;
    std::chrono::milliseconds elapsed{0};

    bool verified() const noexcept { return mismatches.empty(); }
};

/// Size of the largest clique of `g` through `lambda`, found by exact
/// branch-and-bound search over the induced neighborhood. Uses only the
/// adjacency lists of `g`. Throws std::invalid_argument if `lambda` is not a
/// vertex of `g`.
int omega_loc_bruteforce(const Partition& lambda, const PartitionGraph& g);

/// Maximum clique size in the subgraph of `g` induced on `vertex_ids`.
int max_clique_size(const PartitionGraph& g, const std::vector<VertexId>& vertex_ids);

/// Compares max(s, t) from `capacities` with omega_loc - 1 for every
/// partition of n.
OracleReport verify_dimension_formula(int n, const CapacityFn& capacities = capacity_record, unsigned jobs = 1);

} // namespace partlayers
