#include <rdlab/topology.hh>

#include <algorithm>
#include <bit>
#include <unordered_set>

using std::size_t;
using std::uint64_t;

namespace rdlab
{
    auto SimplicialComplex::euler_characteristic() const -> long long
    {
        long long chi = 0;
        for (size_t d = 0; d < by_dimension.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dimension[d].size());
        return chi;
    }

    auto SimplicialComplex::contains(uint64_t mask) const -> bool
    {
        auto d = std::popcount(mask);
        if (d == 0 || size_t(d) > by_dimension.size())
            return false;
        const auto & v = by_dimension[d - 1];
        return std::binary_search(v.begin(), v.end(), mask);
    }

    auto simplices(const Digraph & g, std::optional<size_t> max_dim) -> SimplicialComplex
    {
        const size_t n = g.size();
        if (n > 64 || (! max_dim && n > 16))
            throw Error{"simplex enumeration needs at most 16 vertices (64 with a dimension bound)"};

        std::vector<uint64_t> in_mask(n, 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex u = 0; u < n; ++u)
                if (u != v && g.has_arc(u, v))
                    in_mask[v] |= uint64_t{1} << u;

        // every simplex arises by appending a vertex that receives arcs from all current members
        SimplicialComplex k;
        k.vertex_count = n;
        std::unordered_set<uint64_t> seen;
        std::vector<uint64_t> frontier;
        for (Vertex v = 0; v < n; ++v)
            frontier.push_back(uint64_t{1} << v);
        seen.insert(frontier.begin(), frontier.end());

        while (! frontier.empty()) {
            std::sort(frontier.begin(), frontier.end());
            k.by_dimension.push_back(frontier);
            if (max_dim && k.by_dimension.size() > *max_dim)
                break;
            std::vector<uint64_t> next;
            for (auto s : frontier)
                for (Vertex v = 0; v < n; ++v) {
                    uint64_t bit = uint64_t{1} << v;
                    if ((s & bit) || (in_mask[v] & s) != s)
                        continue;
                    if (seen.insert(s | bit).second)
                        next.push_back(s | bit);
                }
            frontier = std::move(next);
        }
        return k;
    }

    auto euler_characteristic(const Digraph & g) -> long long
    {
        return simplices(g).euler_characteristic();
    }

    auto is_intransitive(const Digraph & g) -> bool
    {
        const size_t n = g.size();
        for (Vertex x = 0; x < n; ++x)
            for (Vertex y = 0; y < n; ++y) {
                if (x == y || ! g.has_arc(x, y))
                    continue;
                for (Vertex z = 0; z < n; ++z)
                    if (z != x && z != y && g.has_arc(y, z) && g.has_arc(x, z))
                        return false;
            }
        return true;
    }

    auto max_simplex_dimension(const Digraph & g) -> size_t
    {
        if (is_intransitive(g))
            return g.size() > 1 && g.arc_count() > g.size() ? 1 : 0;
        return simplices(g, g.size() > 16 ? std::optional<size_t>{g.size() - 1} : std::nullopt).max_dimension();
    }

    auto triangulates_1_sphere(const Digraph & g) -> bool
    {
        const size_t n = g.size();
        if (n < 3)
            return false;
        auto sym = symmetrization(g);
        for (Vertex v = 0; v < n; ++v)
            if (sym.out_degree(v) != 3)
                return false;
        if (weak_components(sym).size() != 1)
            return false;
        if (n == 3)
            return g.arc_count() == 6 && is_intransitive(g);
        return true;
    }
}
