#include "oracles.hh"

#include <rdlab/families.hh>
#include <rdlab/ordinal.hh>
#include <rdlab/poly.hh>

#include <doctest.h>

using namespace rdlab;

TEST_CASE("polymorphism check")
{
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::size_t i = 0; i < k; ++i)
            CHECK(is_polymorphism(adhoc_4cycle(), OperationTable::projection(4, k, i)));
    OperationTable meet{2, 2, {0, 0, 0, 1}};
    CHECK(is_polymorphism(chain(2), meet));
    CHECK(is_polymorphism(ordinal_sum({2, 2, 2}), ternary_witness(2, 2, 2)));
    CHECK_THROWS_AS(is_polymorphism(chain(3), meet), Error);
}

TEST_CASE("polymorphism check agrees with brute force")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_digraph(rng, 2 + trial % 3, 0.5);
        auto f = oracle::random_table(rng, g.size(), 2);
        CHECK(is_polymorphism(g, f) == oracle::is_polymorphism(g, f));
    }
    for (auto & f : oracle::polymorphisms(chain(2), 2))
        CHECK(is_polymorphism(chain(2), f));
}

TEST_CASE("classification")
{
    auto c = classify(OperationTable::projection(3, 3, 0));
    CHECK(c.kind == OperationKind::projection);
    CHECK(c.describe() == "projection(1)");

    OperationTable rot{3, 1, {1, 2, 0}};
    auto lifted = OperationTable::lift(rot, 2, 0);
    auto u = classify(lifted);
    CHECK(u.kind == OperationKind::essentially_unary);
    CHECK(u.coordinate == 0);
    CHECK(u.unary == rot);
    CHECK(u.describe() == "essentially_unary(1)");

    OrdinalSumPoset p{2, 2, 2};
    auto t = ternary_witness(2, 2, 2);
    CHECK(t.at({p.a(0), p.c(0), p.c(0)}) == p.c(0));
    CHECK(t.at({p.a(0), p.c(0), p.a(0)}) == p.a(0));
    auto tc = classify(t);
    CHECK(tc.kind == OperationKind::essential);
    CHECK(tc.essential.size() >= 2);
    CHECK(tc.surjective);
}

TEST_CASE("classification agrees with brute force")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + trial % 3, k = 1 + trial % 3;
        auto f = oracle::random_table(rng, n, k);
        if (trial % 4 == 0)
            f = OperationTable::lift(oracle::random_table(rng, n, 1), k, trial % k);
        auto c = classify(f);
        CHECK(c.essentially_unary() == oracle::essentially_unary(f));
        CHECK((c.kind == OperationKind::projection) == oracle::is_projection(f));
        CHECK(c.surjective == oracle::surjective(f));
        CHECK(c.idempotent == oracle::idempotent(f));
        std::vector<std::size_t> essential;
        for (std::size_t i = 0; i < k; ++i) {
            bool depends = false;
            const std::size_t cells = oracle::ipow(n, k);
            for (std::size_t a = 0; a < cells && ! depends; ++a)
                for (std::size_t b = 0; b < cells && ! depends; ++b) {
                    auto x = oracle::digits(a, n, k), y = oracle::digits(b, n, k);
                    x[i] = y[i] = 0;
                    depends = x == y && f[a] != f[b];
                }
            if (depends)
                essential.push_back(i);
        }
        CHECK(c.essential == essential);
    }
}

TEST_CASE("the Slupecki relation")
{
    auto t2 = slupecki_relation(2);
    CHECK(t2.tuples == std::vector<std::vector<Vertex>>{{0, 0}, {1, 1}});
    CHECK(slupecki_relation(3).size() == 21);
    CHECK(slupecki_relation(4).size() == 232);
    CHECK(slupecki_relation(4).is_slupecki());
    CHECK_FALSE(Relation(3, 3, {{0, 0, 1}}).is_slupecki());
}

TEST_CASE("relation preservation")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    for (std::size_t n = 3; n <= 4; ++n) {
        auto theta = slupecki_relation(n);
        CHECK(preserves_relation(OperationTable::constant(n, 2, 1), theta).holds == true);
        auto lifted = OperationTable::lift(oracle::random_table(rng, n, 1), 3, 1);
        CHECK(preserves_relation(lifted, theta).holds == true);
        for (int trial = 0; trial < 50; ++trial) {
            auto f = oracle::random_table(rng, n, 2);
            auto res = preserves_relation(f, theta);
            REQUIRE(res.holds.has_value());
            CHECK(*res.holds == (! oracle::surjective(f) || oracle::essentially_unary(f)));
            if (n == 3)
                CHECK(*res.holds == oracle::preserves_theta(f));
            for (auto & col : res.counterexample)
                CHECK(theta.contains(col));
        }
    }

    auto t = ternary_witness(2, 2, 2);
    auto res = preserves_relation(t, slupecki_relation(6));
    CHECK(res.holds == false);
    CHECK(res.mode == PreservationMode::violation_search);
    REQUIRE(res.counterexample.size() == 3);
    std::set<Vertex> row_image;
    for (std::size_t r = 0; r < 6; ++r)
        row_image.insert(t.at({res.counterexample[0][r], res.counterexample[1][r], res.counterexample[2][r]}));
    CHECK(row_image.size() == 6);
}

TEST_CASE("k-Slupecki decider")
{
    auto c4 = k_slupecki(symmetric_cycle(4), 2);
    CHECK(c4.holds == true);
    CHECK(k_slupecki(lemma_example_digraph(), 2).holds == true);

    auto p = k_slupecki(ordinal_sum({2, 2, 2}), 2);
    REQUIRE(p.holds == false);
    REQUIRE(p.witness.has_value());
    CHECK(p.canonical);
    CHECK(oracle::is_polymorphism(ordinal_sum({2, 2, 2}), *p.witness));
    CHECK(oracle::surjective(*p.witness));
    CHECK_FALSE(oracle::essentially_unary(*p.witness));
}

TEST_CASE("deciders match brute force with the lexicographically least witness")
{
    for (auto & g : {chain(2), chain(3), directed_cycle(3), path("s"), path("+-"), ordinal_sum({1, 2})}) {
        auto polys = oracle::polymorphisms(g, 2);
        std::optional<OperationTable> slu, idt;
        for (auto & f : polys) {
            if (! slu && oracle::surjective(f) && ! oracle::essentially_unary(f))
                slu = f;
            if (! idt && oracle::idempotent(f) && ! oracle::is_projection(f))
                idt = f;
        }
        auto vs = k_slupecki(g, 2);
        CHECK(vs.holds == ! slu.has_value());
        if (slu)
            CHECK(vs.witness == slu);
        auto vi = k_idempotent_trivial(g, 2);
        CHECK(vi.holds == ! idt.has_value());
        if (idt)
            CHECK(vi.witness == idt);
    }
}

TEST_CASE("idempotent triviality")
{
    CHECK(k_idempotent_trivial(ordinal_sum({2, 2, 2}), 2).holds == true);
    CHECK(k_idempotent_trivial(symmetric_cycle(4), 2).holds == true);
    auto ch = k_idempotent_trivial(chain(2), 2);
    CHECK(ch.holds == false);
    CHECK(ch.witness == OperationTable{2, 2, {0, 0, 0, 1}});
}

TEST_CASE("threaded deciders reach the same verdicts")
{
    DeciderOptions opts;
    opts.threads = 4;
    for (auto & g : {symmetric_cycle(4), ordinal_sum({2, 2, 2}), chain(3)}) {
        auto a = k_slupecki(g, 2);
        auto b = k_slupecki(g, 2, opts);
        CHECK(a.holds == b.holds);
        CHECK_FALSE(b.canonical);
        if (b.witness)
            verify_witness(g, b);
    }
}

TEST_CASE("embedding condition")
{
    auto c4 = symmetric_cycle(4);
    auto p1 = OperationTable::projection(4, 2, 0);
    auto e = embedding_condition(c4, p1);
    REQUIRE(e.embedding.has_value());
    CHECK(is_induced_embedding(c4, power(c4, 2), *e.embedding));
    std::set<Vertex> image;
    for (auto v : *e.embedding)
        image.insert(p1[v]);
    CHECK(image.size() == 4);

    OperationTable flip{4, 1, {2, 3, 0, 1}};
    auto g2 = OperationTable::lift(flip, 2, 1);
    CHECK(embedding_condition(c4, g2).embedding.has_value());

    auto p = ordinal_sum({2, 2, 2});
    auto w = binary_witness(2, 2, 2);
    auto none = embedding_condition(p, w);
    CHECK(none.decided());
    CHECK_FALSE(none.embedding.has_value());
}

TEST_CASE("component witness")
{
    OperationTable top{2, 1, {1, 1}};
    auto f = min_component_witness(chain(2), top);
    CHECK(f == OperationTable{2, 2, {0, 1, 1, 1}});
    CHECK(oracle::is_polymorphism(chain(2), f));
    CHECK_THROWS_AS(min_component_witness(lemma_example_digraph(), OperationTable{4, 1, {1, 1, 2, 3}}), Error);
    CHECK_THROWS_AS(min_component_witness(chain(2), OperationTable::identity(2)), Error);
}

TEST_CASE("neighbour idempotent witness")
{
    OperationTable top{2, 1, {1, 1}};
    auto phi = neighbor_idempotent_witness(chain(2), top);
    CHECK(phi == OperationTable{2, 2, {0, 1, 1, 1}});
    CHECK(oracle::idempotent(phi));
    CHECK_FALSE(oracle::is_projection(phi));

    CHECK_THROWS_AS(neighbor_idempotent_witness(path("s"), OperationTable{2, 1, {1, 0}}), Error);
    CHECK_THROWS_AS(neighbor_idempotent_witness(directed_cycle(3), OperationTable::identity(3)), Error);
}
