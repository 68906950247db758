#include "partlayers/strata.hpp"

#include <algorithm>
#include <stdexcept>

#include "partlayers/parallel.hpp"

namespace partlayers {

LayerAssignment layer_assignment(int n, unsigned jobs)
{
    const auto vertices = enumerate_partitions(n);
    LayerAssignment out;
    out.n = n;
    out.records.resize(vertices.size());
    parallel_for(vertices.size(), jobs, [&](std::size_t v) { out.records[v] = capacity_record(vertices[v]); });
    return out;
}

std::vector<Partition> layer(const LayerAssignment& layers, int r)
{
    std::vector<Partition> out;
    for (const auto& rec : layers.records)
        if (rec.dim_loc == r)
            out.push_back(rec.partition);
    return out;
}

std::vector<Partition> layer(int n, int r)
{
    return layer(layer_assignment(n), r);
}

LayerProfile profile(const LayerAssignment& layers)
{
    if (layers.records.empty())
        throw std::invalid_argument("profile: empty layer assignment");

    LayerProfile p;
    p.n = layers.n;
    p.p_n = layers.records.size();
    for (const auto& rec : layers.records)
        ++p.counts[rec.dim_loc];
    for (const auto& [r, c] : p.counts)
        p.spectrum.push_back(r);
    p.delta_min = p.spectrum.front();
    p.delta_max = p.spectrum.back();
    p.top_size = p.counts.at(p.delta_max);
    for (int r = p.delta_min + 1; r < p.delta_max; ++r)
        if (!p.counts.contains(r))
            p.gaps.push_back(r);
    p.is_interval = p.gaps.empty();
    return p;
}

LayerProfile profile(int n)
{
    return profile(layer_assignment(n));
}

std::vector<LayerProfile> profile_sweep(int n_min, int n_max, unsigned jobs)
{
    if (n_min < 1 || n_min > n_max)
        throw std::invalid_argument("profile_sweep: need 1 <= n_min <= n_max");
    std::vector<LayerProfile> out(static_cast<std::size_t>(n_max - n_min + 1));
    parallel_for(out.size(), jobs, [&](std::size_t i) { out[i] = profile(n_min + static_cast<int>(i)); });
    return out;
}

std::vector<int> delta_loc_column(const std::vector<LayerProfile>& sweep)
{
    std::vector<int> out;
    for (const auto& p : sweep)
        out.push_back(p.delta_max);
    return out;
}

std::vector<std::size_t> tau_top_column(const std::vector<LayerProfile>& sweep)
{
    std::vector<std::size_t> out;
    for (const auto& p : sweep)
        out.push_back(p.top_size);
    return out;
}

std::vector<std::size_t> layer_size_column(const std::vector<LayerProfile>& sweep, int r)
{
    std::vector<std::size_t> out;
    for (const auto& p : sweep)
        out.push_back(p.count(r));
    return out;
}

Stratification stratify(int n, unsigned jobs)
{
    return {build_graph(n, jobs), layer_assignment(n, jobs)};
}

CapacitySymmetry capacity_symmetry(const LayerAssignment& layers)
{
    CapacitySymmetry sym;
    for (const auto& rec : layers.records) {
        const Partition conj = conjugate(rec.partition);
        auto it = std::ranges::lower_bound(layers.records, conj, EnumerationOrder{}, &CapacityRecord::partition);
        const CapacityRecord& other = *it;
        sym.star_invariant = sym.star_invariant && other.s == rec.s;
        sym.top_invariant = sym.top_invariant && other.t == rec.t;
        sym.star_top_swapped = sym.star_top_swapped && other.s == rec.t && other.t == rec.s;
    }
    return sym;
}

} // namespace partlayers
