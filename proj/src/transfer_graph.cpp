#include "partlayers/transfer_graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "partlayers/parallel.hpp"

namespace partlayers {

namespace {

bool contains(const std::vector<Corner>& corners, const Corner& x)
{
    return std::ranges::find(corners, x) != corners.end();
}

// Corners are assumed valid for lambda.
std::optional<Partition> move_cell(const Partition& lambda, const Corner& c, const Corner& a)
{
    // Same row: the cell would leave and re-enter one part.
    if (c.row == a.row)
        return std::nullopt;

    std::vector<int> parts = lambda.parts();
    --parts[static_cast<std::size_t>(c.row) - 1];
    if (static_cast<std::size_t>(a.row) > parts.size())
        parts.push_back(1);
    else
        ++parts[static_cast<std::size_t>(a.row) - 1];
    std::erase(parts, 0);
    std::ranges::sort(parts, std::greater<>{});

    Partition result = canonical_unchecked(std::move(parts));
    if (result == lambda)
        return std::nullopt;
    return result;
}

} // namespace

std::optional<Partition> apply_transfer(const Partition& lambda, const Corner& c, const Corner& a)
{
    if (c.kind != CornerKind::removable || !contains(removable_corners(lambda), c))
        throw std::invalid_argument("apply_transfer: " + to_string(c) + " is not a removable corner of " + lambda.to_string());
    if (a.kind != CornerKind::addable || !contains(addable_corners(lambda), a))
        throw std::invalid_argument("apply_transfer: " + to_string(a) + " is not an addable corner of " + lambda.to_string());
    return move_cell(lambda, c, a);
}

std::vector<Transfer> admissible_transfers(const Partition& lambda)
{
    std::vector<Transfer> out;
    const auto removable = removable_corners(lambda);
    const auto addable = addable_corners(lambda);
    for (const Corner& c : removable)
        for (const Corner& a : addable)
            if (auto mu = move_cell(lambda, c, a))
                out.push_back({lambda, c, a, std::move(*mu)});
    return out;
}

std::vector<Partition> neighbors(const Partition& lambda)
{
    std::vector<Partition> out;
    for (auto& t : admissible_transfers(lambda))
        out.push_back(std::move(t.result));
    std::ranges::sort(out, EnumerationOrder{});
    auto dup = std::ranges::unique(out);
    out.erase(dup.begin(), dup.end());
    return out;
}

bool are_adjacent(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("are_adjacent: size mismatch " + lambda.to_string() + " vs " + mu.to_string());
    return std::ranges::binary_search(neighbors(lambda), mu, EnumerationOrder{});
}

std::optional<VertexId> PartitionGraph::id_of(const Partition& lambda) const
{
    auto it = std::ranges::lower_bound(vertices, lambda, EnumerationOrder{});
    if (it == vertices.end() || *it != lambda)
        return std::nullopt;
    return static_cast<VertexId>(it - vertices.begin());
}

PartitionGraph build_graph(int n, unsigned jobs)
{
    if (n < 1)
        throw std::invalid_argument("build_graph: n must be >= 1");

    PartitionGraph g;
    g.n = n;
    g.vertices = enumerate_partitions(n);
    g.adjacency.resize(g.vertices.size());

    parallel_for(g.vertices.size(), jobs, [&](std::size_t v) {
        auto& adj = g.adjacency[v];
        for (const Partition& mu : neighbors(g.vertices[v]))
            adj.push_back(*g.id_of(mu));
        std::ranges::sort(adj);
    });

    // Forward pairs come from the smaller endpoint's list, backward pairs from
    // the larger one's; adjacency is symmetric iff the two lists agree.
    std::vector<Edge> backward;
    for (VertexId v = 0; v < g.adjacency.size(); ++v)
        for (VertexId w : g.adjacency[v]) {
            if (v < w)
                g.edges.push_back({v, w});
            else
                backward.push_back({w, v});
        }
    std::ranges::sort(g.edges);
    std::ranges::sort(backward);
    if (g.edges != backward)
        throw std::logic_error("build_graph: neighbor generation is not symmetric for n = " + std::to_string(n));
    return g;
}

} // namespace partlayers
