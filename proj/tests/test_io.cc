#include "oracles.hh"

#include <rdlab/families.hh>
#include <rdlab/io.hh>

#include <doctest.h>

#include <sstream>

using namespace rdlab;

TEST_CASE("digraph text round trip")
{
    auto g = lemma_example_digraph();
    std::stringstream s;
    format_digraph(s, g);
    CHECK(parse_digraph(s) == g);
}

TEST_CASE("operation text round trip")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    auto f = oracle::random_table(rng, 6, 3);
    std::stringstream s;
    format_op(s, f);
    CHECK(parse_op(s) == f);
}

TEST_CASE("parse errors name the line")
{
    std::istringstream zero{"n 0\n"};
    CHECK_THROWS_WITH_AS(parse_digraph(zero, "z.dg"), doctest::Contains("z.dg:1"), Error);

    std::istringstream bad{"# comment\nn 3\n0 1\n1 x\n"};
    CHECK_THROWS_WITH_AS(parse_digraph(bad, "b.dg"), doctest::Contains("b.dg:4"), Error);

    std::istringstream range{"n 2\n0 2\n"};
    CHECK_THROWS_AS(parse_digraph(range), Error);

    std::istringstream short_op{"n 2\nk 2\n0 1 1\n"};
    CHECK_THROWS_AS(parse_op(short_op), Error);
}

TEST_CASE("digests are stable and discriminating")
{
    CHECK(digest(chain(3)) == digest(chain(3)));
    CHECK(digest(chain(3)) != digest(antichain(3)));
    CHECK(digest(chain(3)).size() == 16);
}
