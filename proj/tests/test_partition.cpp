#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "partlayers/partition.hpp"

using namespace partlayers;

namespace {

Partition P(std::vector<int> parts) { return make_partition(std::move(parts)); }

bool has_corner(const std::vector<Corner>& cs, int row, int col)
{
    return std::ranges::any_of(cs, [&](const Corner& c) { return c.row == row && c.col == col; });
}

} // namespace

TEST_SUITE("partition")
{
    TEST_CASE("make_partition sorts and validates")
    {
        CHECK(P({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
        CHECK(P({4, 2, 1}).parts() == std::vector<int>{4, 2, 1});
        CHECK(P({1, 3, 2}).size() == 6);
        CHECK_THROWS_AS(P({1, 0}), std::invalid_argument);
        CHECK_THROWS_AS(P({}), std::invalid_argument);
        CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
        CHECK(P({2, 1, 2}) == P({2, 2, 1}));
    }

    TEST_CASE("text encoding")
    {
        CHECK(P({4, 2, 1}).to_string() == "(4,2,1)");
        CHECK(Partition::parse("(4,2,1)") == P({4, 2, 1}));
        CHECK(Partition::parse(" (1, 2) ") == P({2, 1}));
        CHECK_THROWS_AS(Partition::parse("4,2,1"), std::invalid_argument);
        CHECK_THROWS_AS(Partition::parse("(4,,1)"), std::invalid_argument);
        CHECK_THROWS_AS(Partition::parse("()"), std::invalid_argument);
        CHECK_THROWS_AS(Partition::parse("(3,0)"), std::invalid_argument);

        // parse(to_string(x)) == x over every partition of n <= 12
        for (int n = 1; n <= 12; ++n)
            for (const Partition& p : enumerate_partitions(n))
                REQUIRE(Partition::parse(p.to_string()) == p);
    }

    TEST_CASE("enumerate_partitions examples")
    {
        const auto four = enumerate_partitions(4);
        const std::vector<Partition> expected{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})};
        CHECK(four == expected);
        CHECK(enumerate_partitions(1) == std::vector<Partition>{P({1})});
        CHECK(enumerate_partitions(7).size() == 15);
        CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
    }

    TEST_CASE("enumeration is complete, unique and descending")
    {
        const auto p = oracle::partition_numbers(30);
        for (int n = 1; n <= 30; ++n) {
            const auto list = enumerate_partitions(n);
            REQUIRE(static_cast<std::int64_t>(list.size()) == p[static_cast<std::size_t>(n)]);
            for (std::size_t i = 0; i + 1 < list.size(); ++i)
                REQUIRE(list[i] > list[i + 1]);
            for (const auto& x : list) {
                REQUIRE(x.size() == n);
                REQUIRE(std::ranges::is_sorted(x.parts(), std::greater<>{}));
                REQUIRE(x.parts().back() >= 1);
            }
        }
    }

    TEST_CASE("conjugate")
    {
        CHECK(conjugate(P({3, 1})) == P({2, 1, 1}));
        CHECK(conjugate(P({2, 2})) == P({2, 2}));
        CHECK(conjugate(P({4, 2, 1})) == P({3, 2, 1, 1}));
        CHECK(conjugate(Partition{}).empty());

        for (int n = 1; n <= 30; ++n)
            for (const Partition& x : enumerate_partitions(n)) {
                const Partition c = conjugate(x);
                REQUIRE(c.parts() == oracle::conjugate_by_columns(x.parts()));
                REQUIRE(conjugate(c) == x);
            }
    }

    TEST_CASE("removable corners")
    {
        auto rc = removable_corners(P({2, 1, 1}));
        REQUIRE(rc.size() == 2);
        CHECK(rc[0] == Corner{1, 2, CornerKind::removable});
        CHECK(rc[1] == Corner{3, 1, CornerKind::removable});
        CHECK(removable_corners(P({1})) == std::vector<Corner>{{1, 1, CornerKind::removable}});
        CHECK(removable_corners(P({3, 3})) == std::vector<Corner>{{2, 3, CornerKind::removable}});
    }

    TEST_CASE("addable corners")
    {
        auto ac = addable_corners(P({2, 1}));
        REQUIRE(ac.size() == 3);
        CHECK(ac[0] == Corner{1, 3, CornerKind::addable});
        CHECK(ac[1] == Corner{2, 2, CornerKind::addable});
        CHECK(ac[2] == Corner{3, 1, CornerKind::addable});
        CHECK(addable_corners(P({1})) ==
              std::vector<Corner>{{1, 2, CornerKind::addable}, {2, 1, CornerKind::addable}});
        CHECK(addable_corners(P({2, 2})) ==
              std::vector<Corner>{{1, 3, CornerKind::addable}, {3, 1, CornerKind::addable}});
    }

    TEST_CASE("corner counts and conjugation duality")
    {
        for (int n = 1; n <= 30; ++n)
            for (const Partition& x : enumerate_partitions(n)) {
                const auto rc = removable_corners(x);
                const auto ac = addable_corners(x);
                REQUIRE(ac.size() == rc.size() + 1);
                REQUIRE(rc.size() == x.distinct_parts());

                // Removing a removable cell or adding an addable one must
                // leave a valid diagram.
                for (const Corner& c : rc)
                    REQUIRE(x.part(c.row + 1) < c.col);
                for (const Corner& a : ac)
                    REQUIRE((a.row == 1 || x.part(a.row - 1) >= a.col));

                if (n > 18)
                    continue;
                const Partition xc = conjugate(x);
                const auto rcc = removable_corners(xc);
                const auto acc = addable_corners(xc);
                for (const Corner& c : rc)
                    REQUIRE(has_corner(rcc, c.col, c.row));
                for (const Corner& a : ac)
                    REQUIRE(has_corner(acc, a.col, a.row));
                REQUIRE(rcc.size() == rc.size());
                REQUIRE(acc.size() == ac.size());
            }
    }

    TEST_CASE("staircase")
    {
        CHECK(staircase(3) == P({3, 2, 1}));
        CHECK(staircase(3).size() == 6);
        CHECK(staircase(0).empty());
        CHECK(staircase(0).size() == 0);
        CHECK(staircase(4) == P({4, 3, 2, 1}));
        CHECK_THROWS_AS(staircase(-1), std::invalid_argument);
    }

    TEST_CASE("staircase families")
    {
        auto as_set = [](const std::vector<Partition>& v) { return std::set<Partition>(v.begin(), v.end()); };
        CHECK(as_set(staircase_family(2).members) == std::set<Partition>{P({3, 1}), P({2, 2}), P({2, 1, 1})});
        CHECK(as_set(staircase_family(3).members) ==
              std::set<Partition>{P({4, 2, 1}), P({3, 3, 1}), P({3, 2, 2}), P({3, 2, 1, 1})});
        CHECK(staircase_family(0).members == std::vector<Partition>{P({1})});

        for (int r = 0; r <= 10; ++r) {
            const auto family = staircase_family(r);
            REQUIRE(family.members.size() == static_cast<std::size_t>(r + 1));
            REQUIRE(as_set(family.members).size() == family.members.size());
            for (const auto& m : family.members)
                REQUIRE(m.size() == 1 + r * (r + 1) / 2);
        }
    }

    TEST_CASE("join_partitions")
    {
        const std::vector<Partition> list{P({3, 1}), P({2, 2})};
        CHECK(join_partitions(list) == "(3,1);(2,2)");
        CHECK(join_partitions({}) == "");
    }
}
