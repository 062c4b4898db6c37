#include <rdlab/digraph.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::span;
using std::vector;

namespace rdlab
{
    Digraph::Digraph(size_t n, span<const Arc> arcs)
    {
        build(n, arcs);
    }

    Digraph::Digraph(size_t n, std::initializer_list<Arc> arcs)
    {
        build(n, span<const Arc>{arcs.begin(), arcs.size()});
    }

    void Digraph::build(size_t n, span<const Arc> arcs)
    {
        if (n == 0)
            throw Error{"digraph must have at least one vertex"};

        _out.assign(n, VertexSet(n));
        _in.assign(n, VertexSet(n));
        for (Vertex v = 0; v < n; ++v) {
            _out[v].set(v);
            _in[v].set(v);
        }
        for (auto [u, v] : arcs) {
            if (u >= n || v >= n)
                throw Error{"arc (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " + std::to_string(n) + " vertices"};
            _out[u].set(v);
            _in[v].set(u);
        }
        _arc_count = 0;
        for (auto & row : _out)
            _arc_count += row.count();
    }

    auto Digraph::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        result.reserve(_arc_count);
        for (Vertex u = 0; u < size(); ++u)
            for (auto v = _out[u].find_first(); v != VertexSet::npos; v = _out[u].find_next(v))
                result.emplace_back(u, Vertex(v));
        return result;
    }

    auto Digraph::is_symmetric() const -> bool
    {
        return _out == _in;
    }

    auto operator==(const Digraph & a, const Digraph & b) -> bool
    {
        return a._out == b._out;
    }

    auto TupleIndexer::count() const -> size_t
    {
        size_t result = 1;
        for (size_t i = 0; i < arity; ++i)
            result *= base;
        return result;
    }

    auto TupleIndexer::encode(span<const Vertex> coords) const -> size_t
    {
        size_t result = 0;
        for (auto c : coords)
            result = result * base + c;
        return result;
    }

    auto TupleIndexer::decode(size_t index) const -> vector<Vertex>
    {
        vector<Vertex> result(arity);
        for (size_t i = arity; i-- > 0;) {
            result[i] = Vertex(index % base);
            index /= base;
        }
        return result;
    }

    auto TupleIndexer::coordinate(size_t index, size_t position) const -> Vertex
    {
        for (size_t i = arity - 1; i > position; --i)
            index /= base;
        return Vertex(index % base);
    }

    auto TupleIndexer::diagonal(Vertex x) const -> size_t
    {
        size_t result = 0;
        for (size_t i = 0; i < arity; ++i)
            result = result * base + x;
        return result;
    }

    auto product(const Digraph & g, const Digraph & h) -> Digraph
    {
        const size_t hn = h.size();
        vector<Arc> arcs;
        arcs.reserve(g.arc_count() * h.arc_count());
        auto g_arcs = g.arcs();
        auto h_arcs = h.arcs();
        for (auto [g1, g2] : g_arcs)
            for (auto [h1, h2] : h_arcs)
                arcs.emplace_back(Vertex(g1 * hn + h1), Vertex(g2 * hn + h2));
        return Digraph{g.size() * hn, arcs};
    }

    auto power(const Digraph & g, size_t k) -> Digraph
    {
        if (k == 0)
            throw Error{"power requires arity at least 1"};
        Digraph result = g;
        for (size_t i = 1; i < k; ++i)
            result = product(result, g);
        return result;
    }

    auto symmetrization(const Digraph & g) -> Digraph
    {
        vector<Arc> arcs;
        for (auto [u, v] : g.arcs()) {
            arcs.emplace_back(u, v);
            arcs.emplace_back(v, u);
        }
        return Digraph{g.size(), arcs};
    }

    auto induced(const Digraph & g, span<const Vertex> subset) -> Digraph
    {
        if (subset.empty())
            throw Error{"induced subdigraph needs a non-empty vertex set"};
        VertexSet seen(g.size());
        for (auto v : subset) {
            if (v >= g.size())
                throw Error{"vertex " + std::to_string(v) + " out of range"};
            if (seen.test(v))
                throw Error{"vertex " + std::to_string(v) + " repeated in induced subset"};
            seen.set(v);
        }

        vector<Arc> arcs;
        for (Vertex i = 0; i < subset.size(); ++i)
            for (Vertex j = 0; j < subset.size(); ++j)
                if (g.has_arc(subset[i], subset[j]))
                    arcs.emplace_back(i, j);
        return Digraph{subset.size(), arcs};
    }

    auto reachability(const Digraph & g) -> vector<VertexSet>
    {
        const size_t n = g.size();
        vector<VertexSet> reach(n);
        for (Vertex u = 0; u < n; ++u)
            reach[u] = g.out_row(u);
        // Warshall over bit rows
        for (Vertex k = 0; k < n; ++k)
            for (Vertex u = 0; u < n; ++u)
                if (reach[u].test(k))
                    reach[u] |= reach[k];
        return reach;
    }

    namespace
    {
        auto number_blocks(size_t n, const std::function<bool(Vertex, Vertex)> & same) -> ComponentPartition
        {
            ComponentPartition result;
            result.block_of.assign(n, n);
            for (Vertex v = 0; v < n; ++v) {
                if (result.block_of[v] != n)
                    continue;
                size_t id = result.blocks.size();
                result.blocks.emplace_back();
                for (Vertex w = v; w < n; ++w)
                    if (result.block_of[w] == n && same(v, w)) {
                        result.block_of[w] = id;
                        result.blocks.back().push_back(w);
                    }
            }
            return result;
        }
    }

    auto weak_components(const Digraph & g) -> ComponentPartition
    {
        auto reach = reachability(symmetrization(g));
        return number_blocks(g.size(), [&](Vertex a, Vertex b) { return reach[a].test(b); });
    }

    auto strong_components(const Digraph & g) -> ComponentPartition
    {
        auto reach = reachability(g);
        auto result = number_blocks(g.size(), [&](Vertex a, Vertex b) { return reach[a].test(b) && reach[b].test(a); });

        const size_t blocks = result.size();
        result.below.assign(blocks, VertexSet(blocks));
        for (size_t a = 0; a < blocks; ++a) {
            Vertex rep = result.blocks[a].front();
            for (auto v = reach[rep].find_first(); v != VertexSet::npos; v = reach[rep].find_next(v))
                result.below[a].set(result.block_of[v]);
        }
        return result;
    }

    auto ComponentPartition::minimal_blocks() const -> vector<size_t>
    {
        vector<size_t> result;
        for (size_t a = 0; a < blocks.size(); ++a) {
            bool minimal = true;
            for (size_t b = 0; b < blocks.size() && minimal; ++b)
                if (b != a && below[b].test(a))
                    minimal = false;
            if (minimal)
                result.push_back(a);
        }
        return result;
    }

    auto ComponentPartition::maximal_blocks() const -> vector<size_t>
    {
        vector<size_t> result;
        for (size_t a = 0; a < blocks.size(); ++a)
            if (below[a].count() == 1)
                result.push_back(a);
        return result;
    }

    auto is_induced_embedding(const Digraph & h, const Digraph & g, span<const Vertex> e) -> bool
    {
        if (e.size() != h.size())
            return false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] >= g.size())
                return false;
            for (size_t j = 0; j < e.size(); ++j) {
                if (i != j && e[i] == e[j])
                    return false;
                if (h.has_arc(Vertex(i), Vertex(j)) != g.has_arc(e[i], e[j]))
                    return false;
            }
        }
        return true;
    }

    namespace
    {
        struct EmbeddingSearch
        {
            const Digraph & h;
            const Digraph & g;
            const EmbeddingOptions & options;
            BudgetClock clock;
            EmbeddingResult result;
            vector<Vertex> image;

            EmbeddingSearch(const Digraph & h_, const Digraph & g_, const EmbeddingOptions & o) :
                h(h_), g(g_), options(o), clock(o.budget)
            {
            }

            auto search(Vertex v, const vector<VertexSet> & candidates) -> bool
            {
                if (v == h.size()) {
                    result.maps.push_back(image);
                    return result.maps.size() < options.limit;
                }

                const auto & mine = candidates[v];
                for (auto t = mine.find_first(); t != VertexSet::npos; t = mine.find_next(t)) {
                    if (! clock.tick(result.stats))
                        return false;
                    if (options.accept && ! options.accept(v, Vertex(t), span<const Vertex>{image.data(), v}))
                        continue;

                    // forward check every later vertex against the new assignment
                    vector<VertexSet> next(candidates.begin(), candidates.end());
                    bool wiped = false;
                    for (Vertex w = v + 1; w < h.size() && ! wiped; ++w) {
                        auto & c = next[w];
                        if (h.has_arc(v, w))
                            c &= g.out_row(Vertex(t));
                        else
                            c -= g.out_row(Vertex(t));
                        if (h.has_arc(w, v))
                            c &= g.in_row(Vertex(t));
                        else
                            c -= g.in_row(Vertex(t));
                        c.reset(t);
                        wiped = c.none();
                    }
                    if (wiped) {
                        ++result.stats.prunes;
                        continue;
                    }

                    image[v] = Vertex(t);
                    if (! search(v + 1, next))
                        return false;
                }
                return true;
            }
        };
    }

    auto find_embeddings(const Digraph & h, const Digraph & g, const EmbeddingOptions & options) -> EmbeddingResult
    {
        EmbeddingSearch s{h, g, options};
        if (h.size() > g.size() || options.limit == 0)
            return s.result;

        // degree and loop-pattern filter
        vector<VertexSet> candidates(h.size(), VertexSet(g.size()));
        for (Vertex x = 0; x < h.size(); ++x)
            for (Vertex t = 0; t < g.size(); ++t)
                if (g.out_degree(t) >= h.out_degree(x) && g.in_degree(t) >= h.in_degree(x)
                    && g.has_arc(t, t) == h.has_arc(x, x))
                    candidates[x].set(t);

        s.image.assign(h.size(), 0);
        s.search(0, candidates);
        s.result.stats.elapsed_seconds = s.clock.elapsed();
        return std::move(s.result);
    }
}
