#include "partlayers/clique_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "partlayers/parallel.hpp"

namespace partlayers {

namespace {

class Bitset {
public:
    explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        return std::ranges::all_of(words_, [](std::uint64_t w) { return w == 0; });
    }

    Bitset operator&(const Bitset& o) const
    {
        Bitset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] &= o.words_[k];
        return r;
    }

    Bitset minus(const Bitset& o) const
    {
        Bitset r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] &= ~o.words_[k];
        return r;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

// Bron-Kerbosch style search for the maximum clique size, pivoting on the
// candidate with most neighbors inside P and pruning on |R| + |P| <= best.
class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(std::vector<Bitset> adj) : adj_(std::move(adj)) {}

    int run()
    {
        Bitset all(adj_.size());
        for (std::size_t i = 0; i < adj_.size(); ++i)
            all.set(i);
        best_ = 0;
        expand(0, all);
        return best_;
    }

private:
    void expand(int depth, Bitset candidates)
    {
        if (candidates.none()) {
            best_ = std::max(best_, depth);
            return;
        }
        if (depth + static_cast<int>(candidates.count()) <= best_)
            return;

        std::size_t pivot = 0;
        std::size_t pivot_degree = 0;
        bool first = true;
        candidates.for_each([&](std::size_t u) {
            const std::size_t d = (candidates & adj_[u]).count();
            if (first || d > pivot_degree) {
                pivot = u;
                pivot_degree = d;
                first = false;
            }
        });

        const Bitset branch = candidates.minus(adj_[pivot]);
        branch.for_each([&](std::size_t v) {
            expand(depth + 1, candidates & adj_[v]);
            candidates.reset(v);
        });
    }

    std::vector<Bitset> adj_;
    int best_ = 0;
};

} // namespace

int max_clique_size(const PartitionGraph& g, const std::vector<VertexId>& vertex_ids)
{
    std::vector<VertexId> ids = vertex_ids;
    std::ranges::sort(ids);
    std::vector<Bitset> adj(ids.size(), Bitset(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (VertexId w : g.adjacency[ids[i]]) {
            auto it = std::ranges::lower_bound(ids, w);
            if (it != ids.end() && *it == w)
                adj[i].set(static_cast<std::size_t>(it - ids.begin()));
        }
    return MaxCliqueSearch(std::move(adj)).run();
}

int omega_loc_bruteforce(const Partition& lambda, const PartitionGraph& g)
{
    auto id = g.id_of(lambda);
    if (!id)
        throw std::invalid_argument("omega_loc_bruteforce: " + lambda.to_string() + " is not a vertex of G_" + std::to_string(g.n));
    return 1 + max_clique_size(g, g.adjacency[*id]);
}

OracleReport verify_dimension_formula(int n, const CapacityFn& capacities, unsigned jobs)
{
    const auto start = std::chrono::steady_clock::now();
    const PartitionGraph g = build_graph(n, jobs);

    std::vector<int> formula_dims(g.vertex_count());
    std::vector<int> oracle_dims(g.vertex_count());
    parallel_for(g.vertex_count(), jobs, [&](std::size_t v) {
        const CapacityRecord rec = capacities(g.vertices[v]);
        formula_dims[v] = std::max(rec.s, rec.t);
        oracle_dims[v] = omega_loc_bruteforce(g.vertices[v], g) - 1;
    });

    OracleReport report;
    report.n = n;
    report.checked = g.vertex_count();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (formula_dims[v] != oracle_dims[v])
            report.mismatches.push_back({g.vertices[v], formula_dims[v], oracle_dims[v]});
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

} // namespace partlayers
