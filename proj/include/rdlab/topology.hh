#pragma once

#include <rdlab/digraph.hh>

#include <cstdint>
#include <optional>
#include <vector>

namespace rdlab
{
    /// Simplices of K(G) as vertex bitmasks, grouped by dimension.
    struct SimplicialComplex
    {
        std::size_t vertex_count = 0;
        /// by_dimension[d] holds the d-simplices (d+1 vertices), sorted.
        std::vector<std::vector<std::uint64_t>> by_dimension;

        [[nodiscard]] auto max_dimension() const -> std::size_t { return by_dimension.size() - 1; }
        [[nodiscard]] auto count(std::size_t d) const -> std::size_t { return d < by_dimension.size() ? by_dimension[d].size() : 0; }
        [[nodiscard]] auto euler_characteristic() const -> long long;
        [[nodiscard]] auto contains(std::uint64_t mask) const -> bool;
    };

    /**
     * S is a simplex iff it can be ordered s_1..s_t with s_i → s_j for all
     * i < j. Without max_dim the digraph may have at most 16 vertices;
     * with it, at most 64.
     */
    auto simplices(const Digraph & g, std::optional<std::size_t> max_dim = std::nullopt) -> SimplicialComplex;

    auto euler_characteristic(const Digraph & g) -> long long;

    /// G_Sym is one cycle through all vertices, and a 3-cycle only if it is the directed 3-cycle.
    auto triangulates_1_sphere(const Digraph & g) -> bool;

    auto max_simplex_dimension(const Digraph & g) -> std::size_t;

    /// No transitive triple x → y → z, x → z on distinct vertices.
    auto is_intransitive(const Digraph & g) -> bool;
}
