#pragma once

#include <rdlab/digraph.hh>

#include <string_view>
#include <vector>

namespace rdlab
{
    /// Orientation of each edge slot: '+' forward, '-' backward, 's' both ways.
    auto path(std::string_view word) -> Digraph;
    /// Slot i joins i and i+1 mod |word|; girth |word| must be at least 3.
    auto cycle(std::string_view word) -> Digraph;

    auto directed_cycle(std::size_t m) -> Digraph;
    auto symmetric_cycle(std::size_t m) -> Digraph;

    /// The 2m-crown, parameterised by its vertex count 2m: arcs (2i, 2i±1) mod 2m.
    auto crown(std::size_t two_m) -> Digraph;

    /// Symmetric complete digraph on 2n vertices minus the edges {i, i+n}.
    auto complete_minus_matching(std::size_t two_n) -> Digraph;
    /// Complete digraph on n vertices minus the arcs (i, i+1 mod n).
    auto complete_minus_hamiltonian(std::size_t n) -> Digraph;

    auto antichain(std::size_t n) -> Digraph;
    auto chain(std::size_t n) -> Digraph;

    /// Stacked antichains numbered level by level, bottom level first.
    auto ordinal_sum(std::span<const std::size_t> levels) -> Digraph;
    auto ordinal_sum(std::initializer_list<std::size_t> levels) -> Digraph;

    /// Adds two new vertices joined both ways to every old vertex but not to each other.
    auto suspension(const Digraph & g) -> Digraph;
    /// P ⊕ 2. Throws if p is not a poset.
    auto poset_suspension(const Digraph & p) -> Digraph;

    /// Vertices 0..3 with arcs 0→1→2→3→0 and 3→1.
    auto lemma_example_digraph() -> Digraph;
    /// The 4-cycle with arcs 0→1, 1↔2, 2→3, 3↔0.
    auto adhoc_4cycle() -> Digraph;

    auto is_poset(const Digraph & g) -> bool;
}
