#pragma once

#include <rdlab/budget.hh>
#include <rdlab/digraph.hh>
#include <rdlab/operation.hh>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rdlab
{
    /// Candidate set over target vertices; targets are limited to 64 vertices.
    using Domain = std::uint64_t;
    inline constexpr std::size_t max_target_size = 64;

    /// Partial map source vertex → target vertex.
    using Pinning = std::vector<std::pair<Vertex, Vertex>>;

    enum class VariableOrder
    {
        /// Lowest-index open variable first; solutions arrive in lexicographic order.
        lexicographic,
        /// Smallest candidate set first, ties broken by index.
        fail_first
    };

    /// Returns false to stop the search.
    using HomVisitor = std::function<bool(std::span<const Vertex>)>;

    /**
     * Backtracking search for homomorphisms source → target with full arc
     * consistency after every decision. Optional global filters: a
     * surjectivity requirement (value/variable matching) and a strict
     * lexicographic upper bound that the visitor may tighten while the
     * search runs.
     */
    class HomSearch
    {
    public:
        HomSearch(const Digraph & source, const Digraph & target);
        ~HomSearch();
        HomSearch(HomSearch &&) noexcept;
        HomSearch(const HomSearch &) = delete;
        auto operator=(const HomSearch &) -> HomSearch & = delete;

        void restrict_domain(Vertex v, Domain allowed);
        void pin(Vertex v, Vertex value);
        void pin(const Pinning & pins);
        void set_order(VariableOrder order);
        void set_require_surjective(bool on);
        /// Only tables strictly lexicographically below bound are visited from now on.
        void set_strict_upper_bound(std::span<const Vertex> bound);

        auto run(const HomVisitor & visitor, const Budget & budget = {}) -> SearchStats;

    private:
        struct Imp;
        std::unique_ptr<Imp> _imp;
    };

    /// Independent arc-preservation check over every arc of h.
    auto is_homomorphism(const Digraph & h, const Digraph & g, std::span<const Vertex> map) -> bool;

    auto enumerate_homs(const Digraph & h, const Digraph & g, const Pinning & pins, const HomVisitor & visitor,
        const Budget & budget = {}, VariableOrder order = VariableOrder::lexicographic) -> SearchStats;

    /// Throws SearchIncomplete on budget exhaustion.
    auto count_homs(const Digraph & h, const Digraph & g, const Pinning & pins = {}, const Budget & budget = {}) -> std::uint64_t;

    /// All endomorphisms as unary tables, in lexicographic order. Throws SearchIncomplete.
    auto endomorphisms(const Digraph & g, const Budget & budget = {}) -> std::vector<OperationTable>;

    /// The Hom arc rule: (f(x), g(y)) is an arc of target for every arc (x, y) of source.
    auto hom_arc(const Digraph & source, const Digraph & target, std::span<const Vertex> f, std::span<const Vertex> g) -> bool;

    struct HomDigraph
    {
        std::vector<std::vector<Vertex>> maps;
        Digraph graph;

        [[nodiscard]] auto index_of(std::span<const Vertex> map) const -> std::optional<std::size_t>;
    };

    /// Throws SearchIncomplete.
    auto hom_digraph(const Digraph & h, const Digraph & g, const Budget & budget = {}) -> HomDigraph;

    struct IdentityStatus
    {
        bool isolated_loop = false;
        bool alone_weak = false;
        bool alone_strong = false;
        std::size_t identity = 0;
        /// In- and out-neighbours of the identity in Hom(G,G), excluding itself.
        std::vector<std::size_t> neighbors;
        std::vector<std::size_t> weak_component;
        std::vector<std::size_t> strong_component;
        HomDigraph homs;
    };

    /// Throws SearchIncomplete.
    auto identity_status(const Digraph & g, const Budget & budget = {}) -> IdentityStatus;
}
