#include "oracles.hh"

#include <rdlab/families.hh>
#include <rdlab/topology.hh>

#include <doctest.h>

using namespace rdlab;

TEST_CASE("simplex enumeration")
{
    auto sym3 = symmetric_cycle(3);
    CHECK(simplices(sym3).contains(0b111));
    CHECK(simplices(directed_cycle(3)).count(2) == 0);
    CHECK(simplices(ordinal_sum({2, 2, 2})).count(2) == 8);
    CHECK(max_simplex_dimension(chain(3)) == 2);
}

TEST_CASE("simplex counts match ordering enumeration")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_digraph(rng, 2 + trial % 6, 0.45);
        auto k = simplices(g);
        auto expected = oracle::simplex_counts(g);
        REQUIRE(k.max_dimension() + 1 == expected.size());
        for (std::size_t d = 0; d < expected.size(); ++d)
            CHECK(k.count(d) == expected[d]);
    }
}

TEST_CASE("euler characteristics")
{
    CHECK(euler_characteristic(symmetric_cycle(4)) == 0);
    CHECK(euler_characteristic(complete_minus_matching(6)) == 2);
    CHECK(euler_characteristic(ordinal_sum({2, 2, 2})) == 2);
}

TEST_CASE("one-sphere recognition")
{
    CHECK(triangulates_1_sphere(cycle("ssss")));
    CHECK(triangulates_1_sphere(directed_cycle(3)));
    CHECK_FALSE(triangulates_1_sphere(symmetric_cycle(3)));
    CHECK(triangulates_1_sphere(crown(6)));
    CHECK_FALSE(triangulates_1_sphere(chain(3)));
}

TEST_CASE("intransitivity")
{
    CHECK(is_intransitive(directed_cycle(5)));
    CHECK(is_intransitive(crown(6)));
    CHECK_FALSE(is_intransitive(chain(3)));
}
