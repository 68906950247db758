#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "partlayers/transfer_graph.hpp"

using namespace partlayers;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }
Corner rem(int row, int col) { return {row, col, CornerKind::removable}; }
Corner add(int row, int col) { return {row, col, CornerKind::addable}; }

std::set<std::pair<std::string, std::string>> edge_names(const PartitionGraph& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (const Edge& e : g.edges)
        out.insert({g.vertices[e.lo].to_string(), g.vertices[e.hi].to_string()});
    return out;
}

} // namespace

TEST_SUITE("transfer_graph")
{
    TEST_CASE("apply_transfer examples")
    {
        CHECK(apply_transfer(P({2, 2}), rem(2, 2), add(1, 3)) == P({3, 1}));
        CHECK_FALSE(apply_transfer(P({1}), rem(1, 1), add(2, 1)).has_value());
        CHECK_FALSE(apply_transfer(P({3, 1}), rem(1, 3), add(1, 4)).has_value());
        CHECK(apply_transfer(P({2, 1, 1}), rem(3, 1), add(1, 3)) == P({3, 1}));
    }

    TEST_CASE("apply_transfer rejects non-corners")
    {
        CHECK_THROWS_AS(apply_transfer(P({3, 1}), rem(1, 2), add(1, 4)), std::invalid_argument);
        CHECK_THROWS_AS(apply_transfer(P({3, 1}), rem(1, 3), add(2, 3)), std::invalid_argument);
        CHECK_THROWS_AS(apply_transfer(P({3, 1}), add(1, 4), add(1, 4)), std::invalid_argument);
    }

    TEST_CASE("admissible_transfers examples")
    {
        CHECK(admissible_transfers(P({1})).empty());

        const auto two = admissible_transfers(P({2}));
        REQUIRE(two.size() == 1);
        CHECK(two[0].result == P({1, 1}));

        std::set<Partition> results;
        for (const auto& t : admissible_transfers(P({3, 1})))
            results.insert(t.result);
        CHECK(results == std::set<Partition>{P({4}), P({2, 2}), P({2, 1, 1})});
    }

    TEST_CASE("admissible_transfers are ordered and well formed")
    {
        for (int n = 1; n <= 20; ++n)
            for (const Partition& x : enumerate_partitions(n)) {
                const auto ts = admissible_transfers(x);
                for (std::size_t i = 0; i < ts.size(); ++i) {
                    const auto& t = ts[i];
                    REQUIRE(t.source == x);
                    REQUIRE(t.result.size() == n);
                    REQUIRE(t.result != x);
                    REQUIRE(std::ranges::is_sorted(t.result.parts(), std::greater<>{}));
                    REQUIRE(t.c.kind == CornerKind::removable);
                    REQUIRE(t.a.kind == CornerKind::addable);
                    if (i > 0)
                        REQUIRE(std::pair{ts[i - 1].c.row, ts[i - 1].a.row} < std::pair{t.c.row, t.a.row});
                }
            }
    }

    TEST_CASE("neighbors examples")
    {
        CHECK(neighbors(P({2})) == std::vector<Partition>{P({1, 1})});
        CHECK(neighbors(P({4})) == std::vector<Partition>{P({3, 1})});
        CHECK(neighbors(P({3, 1})) == std::vector<Partition>{P({4}), P({2, 2}), P({2, 1, 1})});
        CHECK(neighbors(P({1})).empty());
    }

    TEST_CASE("build_graph examples")
    {
        const auto g1 = build_graph(1);
        CHECK(g1.vertex_count() == 1);
        CHECK(g1.edge_count() == 0);

        const auto g2 = build_graph(2);
        CHECK(g2.vertex_count() == 2);
        CHECK(g2.edges == std::vector<Edge>{{0, 1}});

        const auto g4 = build_graph(4);
        CHECK(g4.vertex_count() == 5);
        const std::set<std::pair<std::string, std::string>> expected{
            {"(4)", "(3,1)"}, {"(3,1)", "(2,2)"}, {"(3,1)", "(2,1,1)"}, {"(2,2)", "(2,1,1)"}, {"(2,1,1)", "(1,1,1,1)"}};
        CHECK(edge_names(g4) == expected);
        CHECK(g4.edge_count() == 5);

        CHECK_THROWS_AS(build_graph(0), std::invalid_argument);
    }

    TEST_CASE("graph structure invariants")
    {
        for (int n = 1; n <= 25; ++n) {
            const auto g = build_graph(n);
            REQUIRE(std::ranges::is_sorted(g.edges));
            REQUIRE(std::ranges::adjacent_find(g.edges) == g.edges.end());
            std::size_t degree_sum = 0;
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                REQUIRE(g.id_of(g.vertices[v]) == v);
                degree_sum += g.adjacency[v].size();
                for (VertexId w : g.adjacency[v]) {
                    REQUIRE(w != v);
                    // symmetry
                    REQUIRE(std::ranges::binary_search(g.adjacency[w], v));
                }
            }
            REQUIRE(degree_sum == 2 * g.edge_count());
            for (const Edge& e : g.edges)
                REQUIRE(e.lo < e.hi);
        }
    }

    TEST_CASE("conjugation is a graph automorphism")
    {
        for (int n = 1; n <= 25; ++n) {
            const auto g = build_graph(n);
            std::vector<VertexId> image(g.vertex_count());
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                image[v] = *g.id_of(conjugate(g.vertices[v]));
            std::vector<Edge> mapped;
            for (const Edge& e : g.edges)
                mapped.push_back({std::min(image[e.lo], image[e.hi]), std::max(image[e.lo], image[e.hi])});
            std::ranges::sort(mapped);
            REQUIRE(mapped == g.edges);
        }
    }

    TEST_CASE("edges match the all-pairs multiset oracle")
    {
        for (int n = 1; n <= 12; ++n) {
            const auto g = build_graph(n);
            for (VertexId u = 0; u < g.vertex_count(); ++u)
                for (VertexId v = 0; v < g.vertex_count(); ++v) {
                    const bool expected = oracle::multiset_adjacent(g.vertices[u].parts(), g.vertices[v].parts());
                    REQUIRE(std::ranges::binary_search(g.adjacency[u], v) == expected);
                    REQUIRE(are_adjacent(g.vertices[u], g.vertices[v]) == expected);
                }
        }
    }

    TEST_CASE("are_adjacent")
    {
        CHECK(are_adjacent(P({4}), P({3, 1})));
        CHECK_FALSE(are_adjacent(P({4}), P({2, 2})));
        CHECK_FALSE(are_adjacent(P({3, 1}), P({3, 1})));
        CHECK_THROWS_AS(are_adjacent(P({3}), P({3, 1})), std::invalid_argument);
    }

    TEST_CASE("worker count does not change the graph")
    {
        for (int n : {1, 9, 17, 24}) {
            const auto a = build_graph(n, 1);
            const auto b = build_graph(n, 8);
            REQUIRE(a.vertices == b.vertices);
            REQUIRE(a.edges == b.edges);
            REQUIRE(a.adjacency == b.adjacency);
        }
    }
}
