#pragma once

#include <rdlab/budget.hh>
#include <rdlab/digraph.hh>
#include <rdlab/hom.hh>
#include <rdlab/operation.hh>

#include <optional>
#include <string>
#include <vector>

namespace rdlab
{
    enum class OperationKind
    {
        projection,
        essentially_unary,
        essential
    };

    auto to_string(OperationKind k) -> std::string;

    struct Classification
    {
        bool surjective = false;
        bool idempotent = false;
        /// Zero-based essential coordinates, ascending.
        std::vector<std::size_t> essential;
        OperationKind kind = OperationKind::essential;
        /// For projection / essentially_unary: the coordinate and the unary part.
        std::size_t coordinate = 0;
        std::optional<OperationTable> unary;

        [[nodiscard]] auto essentially_unary() const -> bool { return kind != OperationKind::essential; }
        /// e.g. "projection(1)", "essentially_unary(2)", "essential(1,2)"; one-based.
        [[nodiscard]] auto describe() const -> std::string;
    };

    auto classify(const OperationTable & f) -> Classification;

    /// Throws Error if f.base() differs from |G|.
    auto is_polymorphism(const Digraph & g, const OperationTable & f) -> bool;

    struct Relation
    {
        std::size_t base = 0;
        std::size_t arity = 0;
        /// Sorted, deduplicated.
        std::vector<std::vector<Vertex>> tuples;

        Relation() = default;
        Relation(std::size_t base, std::size_t arity, std::vector<std::vector<Vertex>> tuples);

        [[nodiscard]] auto contains(std::span<const Vertex> t) const -> bool;
        [[nodiscard]] auto size() const -> std::size_t { return tuples.size(); }
        /// True iff this is exactly the set of non-injective base-tuples.
        [[nodiscard]] auto is_slupecki() const -> bool;
    };

    /// All n-tuples over n elements with fewer than n distinct entries. Requires n ≥ 2.
    auto slupecki_relation(std::size_t n) -> Relation;

    enum class PreservationMode
    {
        exhaustive,
        violation_search
    };

    auto to_string(PreservationMode m) -> std::string;

    struct Preservation
    {
        /// nullopt when the budget ran out; never false without a counterexample.
        std::optional<bool> holds;
        PreservationMode mode = PreservationMode::exhaustive;
        /// Columns (members of R) whose row-wise image leaves R.
        std::vector<std::vector<Vertex>> counterexample;
        SearchStats stats;
    };

    /// Exhaustive column enumeration up to exhaustive_limit column choices;
    /// beyond that, or for θ with n ≥ 5, a targeted violation search.
    auto preserves_relation(const OperationTable & f, const Relation & r, const Budget & budget = {},
        std::uint64_t exhaustive_limit = 50'000'000) -> Preservation;

    struct DeciderOptions
    {
        Budget budget{};
        VariableOrder order = VariableOrder::fail_first;
        /// Canonical mode returns the lexicographically least witness.
        bool canonical = true;
        /// More than one thread gives up the canonical-witness guarantee.
        std::size_t threads = 1;
    };

    struct Verdict
    {
        std::string property;
        std::size_t arity = 0;
        /// nullopt = unknown (budget exhausted before a decision).
        std::optional<bool> holds;
        std::optional<OperationTable> witness;
        std::optional<Classification> witness_class;
        bool canonical = true;
        SearchStats stats;
    };

    /// Every surjective k-ary polymorphism is essentially unary?
    auto k_slupecki(const Digraph & g, std::size_t k, const DeciderOptions & options = {}) -> Verdict;
    /// Every idempotent k-ary polymorphism is a projection?
    auto k_idempotent_trivial(const Digraph & g, std::size_t k, const DeciderOptions & options = {}) -> Verdict;

    /// Re-checks a witness from scratch; throws std::logic_error on mismatch.
    void verify_witness(const Digraph & g, const Verdict & v);

    struct EmbeddingCondition
    {
        /// Lexicographically least induced embedding e: G → G^p with f∘e onto.
        std::optional<std::vector<Vertex>> embedding;
        SearchStats stats;

        [[nodiscard]] auto decided() const -> bool { return embedding || stats.complete(); }
    };

    /// Requires f to be a surjective polymorphism of arity ≥ 2.
    auto embedding_condition(const Digraph & g, const OperationTable & f, const Budget & budget = {}) -> EmbeddingCondition;

    /**
     * For G not strongly connected and an endomorphism r ≠ id adjacent to id:
     * f(x,y) = y on a minimal strong component A (maximal if only r → id),
     * r(y) elsewhere. The result is verified to be an onto binary
     * polymorphism depending on both arguments. Throws Error on bad input.
     */
    auto min_component_witness(const Digraph & g, const OperationTable & r) -> OperationTable;

    /**
     * For a poset, symmetric or intransitive G and an endomorphism f ≠ id
     * adjacent to id in Hom(G,G), builds a binary idempotent polymorphism
     * that is not a projection. Throws Error when no case applies.
     */
    auto neighbor_idempotent_witness(const Digraph & g, const OperationTable & f) -> OperationTable;
}
