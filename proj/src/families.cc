#include <rdlab/families.hh>

using std::size_t;
using std::string_view;
using std::vector;

namespace rdlab
{
    namespace
    {
        void add_slot(vector<Arc> & arcs, char symbol, Vertex a, Vertex b)
        {
            switch (symbol) {
            case '+': arcs.emplace_back(a, b); break;
            case '-': arcs.emplace_back(b, a); break;
            case 's':
                arcs.emplace_back(a, b);
                arcs.emplace_back(b, a);
                break;
            default:
                throw Error{std::string{"bad orientation symbol '"} + symbol + "', expected one of + - s"};
            }
        }
    }

    auto path(string_view word) -> Digraph
    {
        if (word.empty())
            throw Error{"path needs at least one edge slot"};
        vector<Arc> arcs;
        for (size_t i = 0; i < word.size(); ++i)
            add_slot(arcs, word[i], Vertex(i), Vertex(i + 1));
        return Digraph{word.size() + 1, arcs};
    }

    auto cycle(string_view word) -> Digraph
    {
        if (word.size() < 3)
            throw Error{"cycle girth must be at least 3, got " + std::to_string(word.size())};
        vector<Arc> arcs;
        const size_t n = word.size();
        for (size_t i = 0; i < n; ++i)
            add_slot(arcs, word[i], Vertex(i), Vertex((i + 1) % n));
        return Digraph{n, arcs};
    }

    auto directed_cycle(size_t m) -> Digraph
    {
        if (m < 3)
            throw Error{"directed cycle needs girth at least 3"};
        return cycle(std::string(m, '+'));
    }

    auto symmetric_cycle(size_t m) -> Digraph
    {
        if (m < 3)
            throw Error{"symmetric cycle needs girth at least 3"};
        return cycle(std::string(m, 's'));
    }

    auto crown(size_t two_m) -> Digraph
    {
        if (two_m < 4 || two_m % 2 != 0)
            throw Error{"crown needs an even vertex count of at least 4, got " + std::to_string(two_m)};
        vector<Arc> arcs;
        for (size_t i = 0; i < two_m; i += 2) {
            arcs.emplace_back(Vertex(i), Vertex((i + 1) % two_m));
            arcs.emplace_back(Vertex(i), Vertex((i + two_m - 1) % two_m));
        }
        return Digraph{two_m, arcs};
    }

    auto complete_minus_matching(size_t two_n) -> Digraph
    {
        if (two_n < 4 || two_n % 2 != 0)
            throw Error{"complete_minus_matching needs an even vertex count of at least 4"};
        const size_t n = two_n / 2;
        vector<Arc> arcs;
        for (size_t i = 0; i < two_n; ++i)
            for (size_t j = 0; j < two_n; ++j)
                if (i != j && (i % n) != (j % n))
                    arcs.emplace_back(Vertex(i), Vertex(j));
        return Digraph{two_n, arcs};
    }

    auto complete_minus_hamiltonian(size_t n) -> Digraph
    {
        if (n < 3)
            throw Error{"complete_minus_hamiltonian needs at least 3 vertices"};
        vector<Arc> arcs;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (j != (i + 1) % n)
                    arcs.emplace_back(Vertex(i), Vertex(j));
        return Digraph{n, arcs};
    }

    auto antichain(size_t n) -> Digraph
    {
        return Digraph{n, {}};
    }

    auto chain(size_t n) -> Digraph
    {
        vector<size_t> levels(n, 1);
        return ordinal_sum(levels);
    }

    auto ordinal_sum(std::span<const size_t> levels) -> Digraph
    {
        if (levels.empty())
            throw Error{"ordinal sum needs at least one level"};
        vector<size_t> level_of;
        for (size_t l = 0; l < levels.size(); ++l) {
            if (levels[l] == 0)
                throw Error{"ordinal sum levels must be non-empty"};
            level_of.insert(level_of.end(), levels[l], l);
        }
        vector<Arc> arcs;
        for (size_t x = 0; x < level_of.size(); ++x)
            for (size_t y = 0; y < level_of.size(); ++y)
                if (level_of[x] < level_of[y])
                    arcs.emplace_back(Vertex(x), Vertex(y));
        return Digraph{level_of.size(), arcs};
    }

    auto ordinal_sum(std::initializer_list<size_t> levels) -> Digraph
    {
        return ordinal_sum(std::span<const size_t>{levels.begin(), levels.size()});
    }

    auto suspension(const Digraph & g) -> Digraph
    {
        const size_t n = g.size();
        auto arcs = g.arcs();
        for (Vertex v = 0; v < n; ++v)
            for (Vertex pole : {Vertex(n), Vertex(n + 1)}) {
                arcs.emplace_back(v, pole);
                arcs.emplace_back(pole, v);
            }
        return Digraph{n + 2, arcs};
    }

    auto poset_suspension(const Digraph & p) -> Digraph
    {
        if (! is_poset(p))
            throw Error{"poset suspension requires a poset"};
        const size_t n = p.size();
        auto arcs = p.arcs();
        for (Vertex v = 0; v < n; ++v) {
            arcs.emplace_back(v, Vertex(n));
            arcs.emplace_back(v, Vertex(n + 1));
        }
        return Digraph{n + 2, arcs};
    }

    auto lemma_example_digraph() -> Digraph
    {
        return Digraph{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 1}}};
    }

    auto adhoc_4cycle() -> Digraph
    {
        return Digraph{4, {{0, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 0}, {0, 3}}};
    }

    auto is_poset(const Digraph & g) -> bool
    {
        const size_t n = g.size();
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y) {
                if (x != y && g.has_arc(x, y) && g.has_arc(y, x))
                    return false;
                // transitivity: out(y) ⊆ out(x) whenever x → y
                if (g.has_arc(x, y) && ! g.out_row(y).is_subset_of(g.out_row(x)))
                    return false;
            }
        return true;
    }
}
