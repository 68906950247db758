#pragma once

#include <map>
#include <utility>
#include <vector>

#include "partlayers/strata.hpp"

namespace partlayers {

/// Adjacent-layer interface between L_r(n) and L_{r+1}(n). Vertex lists
/// hold sorted vertex ids of the underlying graph.
struct BoundarySlice {
    int n = 0;
    int r = 0;
    std::vector<Edge> edges;
    std::vector<VertexId> lower_vertices; ///< endpoints in L_r
    std::vector<VertexId> upper_vertices; ///< endpoints in L_{r+1}
    std::vector<VertexId> vertex_union;
};

struct BoundaryRow {
    int r = 0;
    std::size_t b_edges = 0;
    std::size_t b_lower = 0;
    std::size_t b_upper = 0;
    std::size_t b_vertices = 0;

    bool operator==(const BoundaryRow&) const = default;
};

struct BoundaryTable {
    int n = 0;
    std::vector<BoundaryRow> rows; ///< r with L_r or L_{r+1} nonempty, ascending
    int max_jump = 0;
    std::map<std::pair<int, int>, std::size_t> cross_counts; ///< keys r < s, nonzero only
    std::size_t intra_edges = 0;
    std::size_t total_edges = 0;

    std::size_t cross_count(int r, int s) const;
};

/// Edges with one endpoint in L_r(n) and the other in L_s(n). Symmetric in
/// (r, s). Throws std::invalid_argument when r == s.
std::vector<Edge> cross_layer_edges(const Stratification& st, int r, int s);
std::vector<Edge> cross_layer_edges(int n, int r, int s);

BoundarySlice boundary_slice(const Stratification& st, int r);
BoundarySlice boundary_slice(int n, int r);

BoundaryTable boundary_table(const Stratification& st);
BoundaryTable boundary_table(int n, unsigned jobs = 1);

/// Largest |dim_loc(lambda) - dim_loc(mu)| over edges; 0 without edges.
int max_edge_jump(const Stratification& st);
int max_edge_jump(int n);

} // namespace partlayers
