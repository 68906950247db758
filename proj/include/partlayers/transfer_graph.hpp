#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partlayers/partition.hpp"

namespace partlayers {

/// An admissible move of one cell from removable corner `c` to addable
/// corner `a`, followed by re-sorting.
struct Transfer {
    Partition source;
    Corner c;
    Corner a;
    Partition result;
};

/// Multiset form of the move: decrement the part holding `c`, increment the
/// part at `a` (or append a 1), re-sort. Returns nullopt when both corners sit
/// on the same row or the result equals `lambda`. Throws
/// std::invalid_argument when `c` is not removable or `a` not addable.
std::optional<Partition> apply_transfer(const Partition& lambda, const Corner& c, const Corner& a);

/// All admissible (c, a) pairs in (c.row, a.row) order.
std::vector<Transfer> admissible_transfers(const Partition& lambda);

/// Distinct transfer results, descending lexicographic. Never contains lambda.
std::vector<Partition> neighbors(const Partition& lambda);

/// Throws std::invalid_argument on a size mismatch.
bool are_adjacent(const Partition& lambda, const Partition& mu);

using VertexId = std::size_t;

struct Edge {
    VertexId lo = 0;
    VertexId hi = 0;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

struct PartitionGraph {
    int n = 0;
    std::vector<Partition> vertices;              ///< enumeration order
    std::vector<Edge> edges;                      ///< lo < hi, sorted
    std::vector<std::vector<VertexId>> adjacency; ///< sorted neighbor ids per vertex

    std::size_t vertex_count() const noexcept { return vertices.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }

    /// Binary search in the enumeration order.
    std::optional<VertexId> id_of(const Partition& lambda) const;
};

/// `jobs` workers generate neighbor lists; 0 means hardware concurrency.
/// Output is independent of the worker count. Throws std::logic_error if
/// neighbor generation is found to be asymmetric.
PartitionGraph build_graph(int n, unsigned jobs = 1);

} // namespace partlayers
