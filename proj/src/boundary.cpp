#include "partlayers/boundary.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace partlayers {

namespace {

void sort_unique(std::vector<VertexId>& ids)
{
    std::ranges::sort(ids);
    auto dup = std::ranges::unique(ids);
    ids.erase(dup.begin(), dup.end());
}

} // namespace

std::size_t BoundaryTable::cross_count(int r, int s) const
{
    auto it = cross_counts.find({std::min(r, s), std::max(r, s)});
    return it == cross_counts.end() ? 0 : it->second;
}

std::vector<Edge> cross_layer_edges(const Stratification& st, int r, int s)
{
    if (r == s)
        throw std::invalid_argument("cross_layer_edges: r and s must differ");
    std::vector<Edge> out;
    for (const Edge& e : st.graph.edges) {
        const int a = st.dim_of(e.lo);
        const int b = st.dim_of(e.hi);
        if ((a == r && b == s) || (a == s && b == r))
            out.push_back(e);
    }
    return out;
}

std::vector<Edge> cross_layer_edges(int n, int r, int s)
{
    return cross_layer_edges(stratify(n), r, s);
}

BoundarySlice boundary_slice(const Stratification& st, int r)
{
    BoundarySlice slice;
    slice.n = st.n();
    slice.r = r;
    slice.edges = cross_layer_edges(st, r, r + 1);
    for (const Edge& e : slice.edges) {
        const bool lo_is_lower = st.dim_of(e.lo) == r;
        slice.lower_vertices.push_back(lo_is_lower ? e.lo : e.hi);
        slice.upper_vertices.push_back(lo_is_lower ? e.hi : e.lo);
    }
    sort_unique(slice.lower_vertices);
    sort_unique(slice.upper_vertices);
    std::ranges::merge(slice.lower_vertices, slice.upper_vertices, std::back_inserter(slice.vertex_union));
    return slice;
}

BoundarySlice boundary_slice(int n, int r)
{
    return boundary_slice(stratify(n), r);
}

BoundaryTable boundary_table(const Stratification& st)
{
    BoundaryTable table;
    table.n = st.n();
    table.total_edges = st.graph.edge_count();
    for (const Edge& e : st.graph.edges) {
        const int a = st.dim_of(e.lo);
        const int b = st.dim_of(e.hi);
        table.max_jump = std::max(table.max_jump, std::abs(a - b));
        if (a == b)
            ++table.intra_edges;
        else
            ++table.cross_counts[{std::min(a, b), std::max(a, b)}];
    }

    const LayerProfile prof = profile(st.layers);
    std::vector<int> rows;
    for (int r : prof.spectrum) {
        if (r > 0)
            rows.push_back(r - 1);
        rows.push_back(r);
    }
    std::ranges::sort(rows);
    auto dup = std::ranges::unique(rows);
    rows.erase(dup.begin(), dup.end());

    for (int r : rows) {
        const BoundarySlice slice = boundary_slice(st, r);
        table.rows.push_back({r, slice.edges.size(), slice.lower_vertices.size(), slice.upper_vertices.size(),
                              slice.vertex_union.size()});
    }
    return table;
}

BoundaryTable boundary_table(int n, unsigned jobs)
{
    return boundary_table(stratify(n, jobs));
}

int max_edge_jump(const Stratification& st)
{
    int jump = 0;
    for (const Edge& e : st.graph.edges)
        jump = std::max(jump, std::abs(st.dim_of(e.lo) - st.dim_of(e.hi)));
    return jump;
}

int max_edge_jump(int n)
{
    return max_edge_jump(stratify(n));
}

} // namespace partlayers
