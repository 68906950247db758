#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>

#include "partlayers/boundary.hpp"
#include "partlayers/restriction.hpp"

using namespace partlayers;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

RegionPredicate self_conjugate_axis() { return builtin_regions().front(); }

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& body)
        : path(std::filesystem::temp_directory_path() / name)
    {
        std::ofstream(path) << body;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_SUITE("restriction")
{
    TEST_CASE("builtin regions")
    {
        const auto regions = builtin_regions();
        REQUIRE(regions.size() == 1);
        CHECK(regions[0].name == "self-conjugate-axis");
        CHECK(regions[0].conj_invariant_declared);
        CHECK(resolve_region("self-conjugate-axis").name == "self-conjugate-axis");
        CHECK_THROWS_AS(resolve_region("no-such-region"), std::invalid_argument);
    }

    TEST_CASE("self-conjugate-axis examples")
    {
        const auto X = self_conjugate_axis();
        CHECK(region_members(layer_assignment(4), X) == std::vector<Partition>{P({2, 2})});
        CHECK(region_members(layer_assignment(1), X) == std::vector<Partition>{P({1})});
        CHECK(region_members(layer_assignment(2), X).empty());

        CHECK(restricted_layer_counts(4, X) == std::map<int, std::size_t>{{2, 1}});
        CHECK(restricted_layer_counts(1, X) == std::map<int, std::size_t>{{0, 1}});
        CHECK(restricted_layer_counts(2, X).empty());

        CHECK(restricted_boundary_count(4, 1, X) == 0);
        CHECK(restricted_boundary_count(1, 0, X) == 0);
    }

    TEST_CASE("full region is the identity")
    {
        for (int n = 1; n <= 14; ++n) {
            const auto st = stratify(n);
            const auto prof = profile(st.layers);
            CHECK(restricted_layer_counts(st.layers, full_region()) == prof.counts);
            for (int r : prof.spectrum) {
                CHECK(restricted_layer(st.layers, r, full_region()) == layer(st.layers, r));
                CHECK(restricted_boundary_count(st, r, full_region()) == cross_layer_edges(st, r, r + 1).size());
            }
        }
    }

    TEST_CASE("restricted data is bounded by the unrestricted data")
    {
        const auto X = self_conjugate_axis();
        for (int n = 1; n <= 20; ++n) {
            const auto st = stratify(n);
            const auto prof = profile(st.layers);
            const auto counts = restricted_layer_counts(st.layers, X);
            std::size_t total = 0;
            for (const auto& [r, count] : counts) {
                REQUIRE(count <= prof.count(r));
                REQUIRE(count > 0);
                total += count;
            }
            REQUIRE(total == region_members(st.layers, X).size());
            for (int r : prof.spectrum) {
                const auto edges = restricted_boundary_edges(st, r, X);
                REQUIRE(edges.size() <= cross_layer_edges(st, r, r + 1).size());
                for (const Edge& e : edges) {
                    REQUIRE(is_self_conjugate(st.graph.vertices[e.lo]));
                    REQUIRE(is_self_conjugate(st.graph.vertices[e.hi]));
                }
            }
        }
    }

    TEST_CASE("region files")
    {
        TempFile good("partlayers_region_good.txt", "# n=4\n(3,1)\n(2,1,1)\n\n# n=5\n(5)\n");
        const auto X = load_region_file(good.path);
        CHECK(X.name == "partlayers_region_good");
        CHECK_FALSE(X.conj_invariant_declared);
        CHECK(X.test(P({3, 1})));
        CHECK(X.test(P({5})));
        CHECK_FALSE(X.test(P({4})));
        CHECK(restricted_layer_counts(4, X) == std::map<int, std::size_t>{{2, 2}});
        CHECK(restricted_boundary_count(4, 1, X) == 0);
        CHECK(resolve_region(good.path.string()).test(P({2, 1, 1})));

        TempFile bad_line("partlayers_region_bad.txt", "# n=4\n(3,x)\n");
        CHECK_THROWS_AS(load_region_file(bad_line.path), std::runtime_error);
        TempFile wrong_size("partlayers_region_size.txt", "# n=4\n(3,3)\n");
        CHECK_THROWS_AS(load_region_file(wrong_size.path), std::runtime_error);
        TempFile no_header("partlayers_region_nohdr.txt", "(3,1)\n");
        CHECK_THROWS_AS(load_region_file(no_header.path), std::runtime_error);
        CHECK_THROWS_AS(load_region_file("/nonexistent/region.txt"), std::runtime_error);
    }

    TEST_CASE("declared invariance is enforced")
    {
        const RegionPredicate lying{"lying", [](const Partition& p) { return p.length() == 1; }, true};
        CHECK_THROWS_AS(restricted_layer_counts(3, lying), std::runtime_error);
        const RegionPredicate honest{"honest", [](const Partition& p) { return p.length() == 1; }, false};
        CHECK(restricted_layer_counts(3, honest) == std::map<int, std::size_t>{{1, 1}});
    }
}
