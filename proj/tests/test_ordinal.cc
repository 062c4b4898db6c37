#include "oracles.hh"

#include <rdlab/ordinal.hh>
#include <rdlab/poly.hh>

#include <doctest.h>

using namespace rdlab;

TEST_CASE("mu against brute force")
{
    auto r = mu(2, 2);
    CHECK(r.value == 2);
    CHECK(r.argmax == std::vector<Quadruple>{{1, 1, 1, 1}});
    for (std::size_t m = 2; m <= 14; ++m)
        for (std::size_t k = 2; k <= 14; ++k) {
            auto got = mu(m, k);
            long expected = oracle::mu(m, k);
            CHECK((got.value ? long(*got.value) : -1) == expected);
        }
    auto big = mu(12, 12);
    REQUIRE(big.value.has_value());
    CHECK(*big.value >= 145);
    CHECK((12 - 9) * (12 - 8) >= 11);
}

TEST_CASE("B values")
{
    for (std::size_t m = 2; m <= 11; ++m)
        for (std::size_t k = 2; k <= 11; ++k)
            CHECK(bmk(m, k).value == m * k);
    auto b = bmk(12, 12);
    CHECK(b.value == 145);
    CHECK_FALSE(b.uses_mk());
    CHECK(std::find(b.argmax.begin(), b.argmax.end(), Quadruple{9, 8, 9, 8}) != b.argmax.end());
}

TEST_CASE("two-Slupecki threshold")
{
    CHECK_FALSE(two_slupecki_predicate(2, 2, 2));
    CHECK(two_slupecki_predicate(2, 6, 2));
    CHECK_FALSE(two_slupecki_predicate(12, 146, 12));
    CHECK(two_slupecki_predicate(12, 147, 12));
}

TEST_CASE("ternary witness values")
{
    OrdinalSumPoset p{2, 2, 2};
    auto f = ternary_witness(2, 2, 2);
    CHECK(f.at({p.a(0), p.c(0), p.c(0)}) == p.c(0));
    CHECK(f.at({p.a(0), p.c(0), p.a(0)}) == p.a(0));
    CHECK(f.at({p.a(0), p.c(0), p.b(1)}) == p.b(1));
    CHECK(f.at({p.c(0), p.c(0), p.b(0)}) == p.c(0));
    for (std::size_t m = 2; m <= 3; ++m)
        for (std::size_t n = 2; n <= 3; ++n) {
            auto g = ternary_witness(m, n, 2);
            OrdinalSumPoset q{m, n, 2};
            CHECK(oracle::is_polymorphism(q.graph, g));
            CHECK(oracle::surjective(g));
            CHECK_FALSE(oracle::essentially_unary(g));
        }
}

TEST_CASE("binary witness")
{
    OrdinalSumPoset p{2, 2, 2};
    auto f = binary_witness(2, 2, 2);
    CHECK(f.at({p.a(0), p.c(0)}) == p.b(1));
    CHECK(f.at({p.a(0), p.b(0)}) == p.a(0));
    CHECK(f.at({p.b(0), p.b(1)}) == p.b(0));
    for (std::size_t n = 2; n <= 5; ++n) {
        OrdinalSumPoset q{2, n, 2};
        auto g = binary_witness(2, n, 2);
        CHECK(oracle::is_polymorphism(q.graph, g));
        CHECK(oracle::surjective(g));
        CHECK_FALSE(oracle::essentially_unary(g));
    }
    CHECK_THROWS_AS(binary_witness(2, 6, 2), Error);
}

TEST_CASE("l/r profiles")
{
    OrdinalSumPoset p{2, 2, 2};
    auto proj = lr_profile(p, OperationTable::projection(6, 2, 0));
    CHECK(proj.l_a == p.level_a());
    CHECK(proj.l_a_value == p.level_a());
    CHECK(proj.r_a.empty());
    auto second = lr_profile(p, OperationTable::projection(6, 2, 1));
    CHECK(second.r_c == p.level_c());
    CHECK(second.l_c.empty());

    auto b = bmk(12, 12);
    REQUIRE_FALSE(b.argmax.empty());
    auto q = b.argmax.front();
    OrdinalSumPoset big{12, 2, 12};
    auto prof = lr_profile(big, binary_witness(12, 2, 12));
    CHECK(prof.l_a.size() == q[0]);
    CHECK(prof.r_a.size() == q[1]);
}

TEST_CASE("claims")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        OrdinalSumPoset p{2, n, 2};
        for (auto & c : verify_claims(p, binary_witness(2, n, 2)))
            CHECK_MESSAGE(c.outcome != ClaimOutcome::fail, "claim " << c.claim << ": " << c.detail);
    }

    OrdinalSumPoset p{2, 2, 2};
    auto res = verify_claims(p, OperationTable::projection(6, 2, 0));
    for (auto & c : res) {
        if (c.claim == 1)
            CHECK(c.outcome == ClaimOutcome::pass);
        if (c.claim == 4)
            CHECK(c.outcome == ClaimOutcome::not_applicable);
    }

    auto broken = binary_witness(2, 2, 2);
    std::vector<Vertex> v(broken.values().begin(), broken.values().end());
    std::swap(v[0], v.back());
    CHECK_THROWS_AS(verify_claims(p, OperationTable{6, 2, v}), Error);
}
