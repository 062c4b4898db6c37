// Randomized checks; the seed comes from RDLAB_SEED.

#include "oracles.hh"

#include <rdlab/families.hh>
#include <rdlab/hom.hh>
#include <rdlab/io.hh>
#include <rdlab/poly.hh>
#include <rdlab/topology.hh>

#include <doctest.h>

#include <sstream>

using namespace rdlab;

namespace
{
    auto rng() -> std::mt19937_64 &
    {
        static std::mt19937_64 r{oracle::seed_from_env()};
        return r;
    }
}

TEST_CASE("every emitted homomorphism passes the arc recheck")
{
    for (int trial = 0; trial < 100; ++trial) {
        auto h = oracle::random_digraph(rng(), 2 + trial % 5, 0.3);
        auto g = oracle::random_digraph(rng(), 2 + trial % 4, 0.5);
        enumerate_homs(h, g, {}, [&](std::span<const Vertex> m) {
            std::vector<Vertex> v(m.begin(), m.end());
            CHECK(oracle::is_hom(h, g, v));
            return true;
        });
    }
}

TEST_CASE("enumeration is deterministic")
{
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_digraph(rng(), 3 + trial % 2, 0.5);
        auto pg = power(g, 2);
        std::vector<std::vector<Vertex>> first, second;
        for (auto * out : {&first, &second})
            enumerate_homs(
                pg, g, {},
                [&](std::span<const Vertex> m) {
                    out->emplace_back(m.begin(), m.end());
                    return true;
                },
                Budget{}, VariableOrder::fail_first);
        CHECK(first == second);
    }
}

TEST_CASE("product arc counts multiply")
{
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_digraph(rng(), 1 + trial % 6, 0.4);
        auto h = oracle::random_digraph(rng(), 1 + trial % 5, 0.4);
        auto p = product(g, h);
        CHECK(p.size() == g.size() * h.size());
        CHECK(p.arc_count() == g.arc_count() * h.arc_count());
    }
}

TEST_CASE("theta preservation versus the essentially-unary-or-not-onto test")
{
    for (std::size_t n = 3; n <= 4; ++n) {
        auto theta = slupecki_relation(n);
        for (int trial = 0; trial < 300; ++trial) {
            auto f = oracle::random_table(rng(), n, 2);
            if (trial % 3 == 0)
                f = OperationTable::lift(oracle::random_table(rng(), n, 1), 2, trial % 2);
            auto res = preserves_relation(f, theta);
            REQUIRE(res.holds.has_value());
            CHECK(*res.holds == (! oracle::surjective(f) || oracle::essentially_unary(f)));
        }
    }
}

TEST_CASE("verdict implications")
{
    for (int trial = 0; trial < 30; ++trial) {
        auto g = oracle::random_digraph(rng(), 2 + trial % 3, 0.45);
        DeciderOptions opts;
        opts.budget.max_nodes = 2'000'000;
        auto s2 = k_slupecki(g, 2, opts);
        auto s3 = k_slupecki(g, 3, opts);
        auto i2 = k_idempotent_trivial(g, 2, opts);
        if (s3.holds && s2.holds)
            CHECK((! *s3.holds || *s2.holds));
        if (s2.holds && i2.holds)
            CHECK((! *s2.holds || *i2.holds));
        for (auto * v : {&s2, &s3, &i2})
            if (v->witness)
                verify_witness(g, *v);
    }
}

TEST_CASE("ordinal sums are posets")
{
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::size_t> levels(1 + trial % 4);
        for (auto & l : levels)
            l = 1 + rng()() % 3;
        CHECK(is_poset(ordinal_sum(levels)));
    }
}

TEST_CASE("file formats round trip")
{
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_digraph(rng(), 1 + trial % 9, 0.3);
        std::stringstream s;
        format_digraph(s, g);
        CHECK(parse_digraph(s) == g);

        auto f = oracle::random_table(rng(), 1 + trial % 5, 1 + trial % 4);
        std::stringstream t;
        format_op(t, f);
        CHECK(parse_op(t) == f);
    }
}

TEST_CASE("simplex counts on random digraphs")
{
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_digraph(rng(), 3 + trial % 5, 0.5);
        auto expected = oracle::simplex_counts(g);
        long long chi = 0;
        for (std::size_t d = 0; d < expected.size(); ++d)
            chi += (d % 2 ? -1 : 1) * (long long) expected[d];
        CHECK(euler_characteristic(g) == chi);
    }
}
