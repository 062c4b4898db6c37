#include "oracles.hh"

#include <rdlab/families.hh>
#include <rdlab/hom.hh>

#include <doctest.h>

using namespace rdlab;

namespace
{
    auto all_homs(const Digraph & h, const Digraph & g, const Pinning & pins = {}, VariableOrder order = VariableOrder::lexicographic)
        -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        auto stats = enumerate_homs(
            h, g, pins,
            [&](std::span<const Vertex> m) {
                out.emplace_back(m.begin(), m.end());
                return true;
            },
            Budget::unlimited(), order);
        REQUIRE(stats.complete());
        return out;
    }

    auto find_table(const HomDigraph & hd, std::initializer_list<Vertex> values) -> std::size_t
    {
        std::vector<Vertex> v{values};
        auto idx = hd.index_of(v);
        REQUIRE(idx.has_value());
        return *idx;
    }
}

TEST_CASE("homomorphism counts on small cases")
{
    Digraph point{1, {}};
    CHECK(count_homs(point, lemma_example_digraph()) == 4);
    CHECK(endomorphisms(directed_cycle(3)).size() == 6);
    CHECK(endomorphisms(chain(2)).size() == 3);

    auto targets = all_homs(path("+"), complete_minus_hamiltonian(4), {{0, 0}});
    std::set<Vertex> ends;
    for (auto & m : targets)
        ends.insert(m[1]);
    CHECK(ends == std::set<Vertex>{0, 2, 3});
}

TEST_CASE("enumeration matches brute force in lexicographic order")
{
    std::mt19937_64 rng{oracle::seed_from_env()};
    for (int trial = 0; trial < 40; ++trial) {
        auto h = oracle::random_digraph(rng, 2 + trial % 4, 0.4);
        auto g = oracle::random_digraph(rng, 2 + trial % 3, 0.5);
        auto expected = oracle::homs(h, g);
        CHECK(all_homs(h, g) == expected);

        auto ff = all_homs(h, g, {}, VariableOrder::fail_first);
        std::sort(ff.begin(), ff.end());
        CHECK(ff == expected);
    }
}

TEST_CASE("counts on powers match the plain backtracker")
{
    for (auto & g : {lemma_example_digraph(), directed_cycle(3), chain(2), adhoc_4cycle()}) {
        auto pg = power(g, 2);
        std::uint64_t expected = 0;
        oracle::homs_backtrack(pg, g, [&](const auto &) { ++expected; });
        CHECK(count_homs(pg, g) == expected);
    }
}

TEST_CASE("pins restrict the search")
{
    auto g = symmetric_cycle(6);
    auto h = path("ss");
    for (auto & m : all_homs(h, g, {{0, 2}, {2, 4}})) {
        CHECK(m[0] == 2);
        CHECK(m[2] == 4);
        CHECK(is_homomorphism(h, g, m));
    }
    CHECK(count_homs(h, g, {{0, 0}, {2, 3}}) == 0);
}

TEST_CASE("surjective search and upper bound")
{
    auto g = directed_cycle(3);
    auto pg = power(g, 2);
    std::size_t surj = 0;
    oracle::homs_backtrack(pg, g, [&](const auto & m) {
        if (std::set<Vertex>(m.begin(), m.end()).size() == 3)
            ++surj;
    });
    HomSearch s{pg, g};
    s.set_require_surjective(true);
    std::size_t seen = 0;
    auto stats = s.run([&](std::span<const Vertex> m) {
        CHECK(std::set<Vertex>(m.begin(), m.end()).size() == 3);
        ++seen;
        return true;
    });
    CHECK(stats.complete());
    CHECK(seen == surj);

    auto homs = oracle::homs(pg, g);
    HomSearch bounded{pg, g};
    bounded.set_strict_upper_bound(homs[3]);
    std::size_t below = 0;
    bounded.run([&](std::span<const Vertex>) {
        ++below;
        return true;
    });
    CHECK(below == 3);
}

TEST_CASE("node budget yields an incomplete status")
{
    auto g = symmetric_cycle(4);
    Budget tiny;
    tiny.max_nodes = 10;
    auto stats = enumerate_homs(power(g, 2), g, {}, [](auto) { return true; }, tiny);
    CHECK(stats.status == BudgetStatus::node_budget_hit);
    CHECK_THROWS_AS(count_homs(power(g, 2), g, {}, tiny), SearchIncomplete);
}

TEST_CASE("hom digraph")
{
    auto g = lemma_example_digraph();
    auto hd = hom_digraph(g, g);
    auto id = find_table(hd, {0, 1, 2, 3});
    auto r = find_table(hd, {1, 1, 2, 3});
    auto s = find_table(hd, {3, 1, 2, 3});
    CHECK(hd.graph.has_arc(Vertex(s), Vertex(id)));
    CHECK(hd.graph.has_arc(Vertex(id), Vertex(r)));
    for (std::size_t a = 0; a < hd.maps.size(); ++a)
        for (std::size_t b = 0; b < hd.maps.size(); ++b)
            CHECK(hd.graph.has_arc(Vertex(a), Vertex(b)) == hom_arc(g, g, hd.maps[a], hd.maps[b]));

    Digraph point{1, {}};
    auto hp = hom_digraph(point, g);
    CHECK(hp.graph == g);
}

TEST_CASE("composition preserves hom arcs")
{
    auto g = adhoc_4cycle();
    auto hd = hom_digraph(g, g);
    auto compose_maps = [](const std::vector<Vertex> & outer, const std::vector<Vertex> & inner) {
        std::vector<Vertex> out(inner.size());
        for (std::size_t i = 0; i < inner.size(); ++i)
            out[i] = outer[inner[i]];
        return out;
    };
    for (std::size_t a = 0; a < hd.maps.size(); ++a)
        for (std::size_t b = 0; b < hd.maps.size(); ++b) {
            if (! hd.graph.has_arc(Vertex(a), Vertex(b)))
                continue;
            for (std::size_t h = 0; h < hd.maps.size(); h += 3) {
                CHECK(hom_arc(g, g, compose_maps(hd.maps[h], hd.maps[a]), compose_maps(hd.maps[h], hd.maps[b])));
                CHECK(hom_arc(g, g, compose_maps(hd.maps[a], hd.maps[h]), compose_maps(hd.maps[b], hd.maps[h])));
            }
        }
}

TEST_CASE("identity status")
{
    auto st = identity_status(lemma_example_digraph());
    CHECK_FALSE(st.isolated_loop);
    CHECK(st.alone_strong);
    CHECK(st.weak_component.size() == 3);

    CHECK(identity_status(ordinal_sum({2, 2, 2})).isolated_loop);

    auto ch = identity_status(chain(2));
    CHECK_FALSE(ch.isolated_loop);
    CHECK(hom_arc(chain(2), chain(2), std::vector<Vertex>{0, 1}, std::vector<Vertex>{1, 1}));

    for (auto & g : {directed_cycle(3), symmetric_cycle(4), crown(6), chain(3)}) {
        auto s = identity_status(g);
        if (s.isolated_loop)
            CHECK(s.alone_weak);
        if (s.alone_weak)
            CHECK(s.alone_strong);
    }
}
