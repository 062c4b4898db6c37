#include "oracles.hh"

#include <rdlab/digraph.hh>
#include <rdlab/families.hh>

#include <doctest.h>

using namespace rdlab;

TEST_CASE("construction adds loops and checks ranges")
{
    Digraph one{1, {}};
    CHECK(one.size() == 1);
    CHECK(one.arc_count() == 1);
    CHECK(one.has_arc(0, 0));

    Digraph g{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}}};
    CHECK(g.arc_count() == 9);
    CHECK(g == lemma_example_digraph());

    CHECK_THROWS_AS((Digraph{3, {{0, 5}}}), Error);
}

TEST_CASE("products and powers")
{
    auto c4 = symmetric_cycle(4);
    Digraph loop{1, {}};
    CHECK(product(loop, loop) == loop);

    auto sq = product(c4, c4);
    CHECK(sq.size() == 16);
    CHECK(sq.arc_count() == 144);
    for (Vertex v = 0; v < sq.size(); ++v)
        CHECK(sq.has_arc(v, v));
    CHECK(power(c4, 2) == sq);
    CHECK(power(directed_cycle(3), 3).size() == 27);
    CHECK(power(c4, 1) == c4);
}

TEST_CASE("product arcs follow coordinates")
{
    auto g = lemma_example_digraph();
    auto h = directed_cycle(3);
    auto p = product(g, h);
    for (Vertex x = 0; x < p.size(); ++x)
        for (Vertex y = 0; y < p.size(); ++y)
            CHECK(p.has_arc(x, y) == (g.has_arc(x / 3, y / 3) && h.has_arc(x % 3, y % 3)));
}

TEST_CASE("tuple indexer is row-major")
{
    TupleIndexer t{3, 4};
    CHECK(t.count() == 81);
    for (std::size_t i = 0; i < t.count(); ++i) {
        auto d = t.decode(i);
        CHECK(d == oracle::digits(i, 3, 4));
        CHECK(t.encode(d) == i);
        CHECK(t.coordinate(i, 2) == d[2]);
    }
    CHECK(t.diagonal(2) == 80);
}

TEST_CASE("symmetrization")
{
    CHECK(symmetrization(directed_cycle(3)) == symmetric_cycle(3));
    auto c4 = symmetric_cycle(4);
    CHECK(symmetrization(c4) == c4);
    Digraph expected{4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}, {1, 3}, {3, 1}}};
    CHECK(symmetrization(lemma_example_digraph()) == expected);
}

TEST_CASE("components")
{
    CHECK(strong_components(lemma_example_digraph()).size() == 1);

    auto sc = strong_components(chain(2));
    REQUIRE(sc.size() == 2);
    CHECK(sc.below[sc.block_of[0]].test(sc.block_of[1]));
    CHECK_FALSE(sc.below[sc.block_of[1]].test(sc.block_of[0]));
    CHECK(sc.minimal_blocks() == std::vector<std::size_t>{sc.block_of[0]});
    CHECK(sc.maximal_blocks() == std::vector<std::size_t>{sc.block_of[1]});

    CHECK(weak_components(Digraph{2, {}}).size() == 2);
}

TEST_CASE("components agree with breadth-first reachability")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    for (int trial = 0; trial < 50; ++trial) {
        auto g = oracle::random_digraph(rng, 2 + trial % 7, 0.2);
        auto r = oracle::reaches(g);
        auto reach = reachability(g);
        auto sc = strong_components(g);
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = 0; v < g.size(); ++v) {
                CHECK(reach[u].test(v) == r[u][v]);
                CHECK((sc.block_of[u] == sc.block_of[v]) == (r[u][v] && r[v][u]));
            }
    }
}

TEST_CASE("induced subgraphs")
{
    std::vector<Vertex> s{1, 2, 3};
    CHECK(induced(lemma_example_digraph(), s) == directed_cycle(3));
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(induced(lemma_example_digraph(), all) == lemma_example_digraph());
    std::vector<Vertex> edge{0, 1};
    CHECK(induced(symmetric_cycle(6), edge) == path("s"));
    std::vector<Vertex> repeated{0, 0};
    CHECK_THROWS_AS(induced(chain(3), repeated), Error);
}

TEST_CASE("induced embeddings")
{
    Digraph point{1, {}};
    CHECK(find_embeddings(point, lemma_example_digraph()).maps.size() == 4);
    CHECK(find_embeddings(path("s"), directed_cycle(3)).maps.empty());

    auto c4 = symmetric_cycle(4);
    auto sq = power(c4, 2);
    auto res = find_embeddings(c4, sq);
    CHECK_FALSE(res.maps.empty());
    CHECK(std::find(res.maps.begin(), res.maps.end(), std::vector<Vertex>{0, 4, 8, 12}) != res.maps.end());
    for (auto & e : res.maps)
        CHECK(is_induced_embedding(c4, sq, e));
    CHECK(std::is_sorted(res.maps.begin(), res.maps.end()));
}
