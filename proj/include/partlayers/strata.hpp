#pragma once

#include <map>
#include <vector>

#include "partlayers/capacity.hpp"
#include "partlayers/transfer_graph.hpp"

namespace partlayers {

/// Capacity record and layer value for every vertex of G_n, indexed by
/// vertex id (enumeration order).
struct LayerAssignment {
    int n = 0;
    std::vector<CapacityRecord> records;

    std::size_t vertex_count() const noexcept { return records.size(); }
    int dim_of(VertexId v) const { return records.at(v).dim_loc; }
    const Partition& vertex(VertexId v) const { return records.at(v).partition; }
};

LayerAssignment layer_assignment(int n, unsigned jobs = 1);

/// Exact level set L_r(n) in enumeration order; empty when r is unrealized.
std::vector<Partition> layer(const LayerAssignment& layers, int r);
std::vector<Partition> layer(int n, int r);

struct LayerProfile {
    int n = 0;
    std::map<int, std::size_t> counts; ///< realized r only
    std::vector<int> spectrum;
    int delta_min = 0;
    int delta_max = 0;
    std::size_t top_size = 0;
    std::size_t p_n = 0;
    bool is_interval = true;
    std::vector<int> gaps; ///< unrealized r strictly between delta_min and delta_max

    /// a_{n,r}; zero for unrealized r.
    std::size_t count(int r) const
    {
        auto it = counts.find(r);
        return it == counts.end() ? 0 : it->second;
    }
};

LayerProfile profile(const LayerAssignment& layers);
LayerProfile profile(int n);

/// Profiles for n_min..n_max in increasing n; per-n work units are spread
/// over `jobs` workers.
std::vector<LayerProfile> profile_sweep(int n_min, int n_max, unsigned jobs = 1);

/// Delta_loc(n) column of a sweep.
std::vector<int> delta_loc_column(const std::vector<LayerProfile>& sweep);
/// tau_top(n) column of a sweep.
std::vector<std::size_t> tau_top_column(const std::vector<LayerProfile>& sweep);
/// a_r(n) column of a sweep.
std::vector<std::size_t> layer_size_column(const std::vector<LayerProfile>& sweep, int r);

/// Graph plus layer values for one n; the shared input of the boundary and
/// restriction modules.
struct Stratification {
    PartitionGraph graph;
    LayerAssignment layers;

    int n() const noexcept { return graph.n; }
    int dim_of(VertexId v) const { return layers.dim_of(v); }
};

Stratification stratify(int n, unsigned jobs = 1);

/// Whether s and t are individually invariant under conjugation over Par(n),
/// and whether conjugation swaps them. Reported, not asserted.
struct CapacitySymmetry {
    bool star_invariant = true;
    bool top_invariant = true;
    bool star_top_swapped = true;
};

CapacitySymmetry capacity_symmetry(const LayerAssignment& layers);

} // namespace partlayers
