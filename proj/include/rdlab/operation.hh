#pragma once

#include <rdlab/digraph.hh>

#include <cstddef>
#include <span>
#include <vector>

namespace rdlab
{
    /**
     * A k-ary operation on {0..n-1} stored as its full value table, indexed
     * in TupleIndexer order (first argument most significant).
     */
    class OperationTable
    {
    public:
        OperationTable() = default;
        /// Throws Error unless values has exactly base^arity entries, all below base.
        OperationTable(std::size_t base, std::size_t arity, std::vector<Vertex> values);

        static auto projection(std::size_t base, std::size_t arity, std::size_t coordinate) -> OperationTable;
        static auto constant(std::size_t base, std::size_t arity, Vertex value) -> OperationTable;
        static auto identity(std::size_t base) -> OperationTable;
        /// (x_1..x_k) ↦ g(x_coordinate) for a unary g.
        static auto lift(const OperationTable & g, std::size_t arity, std::size_t coordinate) -> OperationTable;

        [[nodiscard]] auto base() const -> std::size_t { return _base; }
        [[nodiscard]] auto arity() const -> std::size_t { return _arity; }
        [[nodiscard]] auto values() const -> std::span<const Vertex> { return _values; }
        [[nodiscard]] auto indexer() const -> TupleIndexer { return TupleIndexer{_base, _arity}; }

        [[nodiscard]] auto operator[](std::size_t index) const -> Vertex { return _values[index]; }
        [[nodiscard]] auto at(std::span<const Vertex> args) const -> Vertex;
        [[nodiscard]] auto at(std::initializer_list<Vertex> args) const -> Vertex;

        /// Set of values taken.
        [[nodiscard]] auto image() const -> VertexSet;

        friend auto operator==(const OperationTable &, const OperationTable &) -> bool = default;

    private:
        std::size_t _base = 1;
        std::size_t _arity = 1;
        std::vector<Vertex> _values{0};
    };

    /// g ∘ f for unary g.
    auto compose(const OperationTable & g, const OperationTable & f) -> OperationTable;
}
