#include <rdlab/operation.hh>

using std::size_t;
using std::vector;

namespace rdlab
{
    OperationTable::OperationTable(size_t base, size_t arity, vector<Vertex> values) :
        _base(base), _arity(arity), _values(std::move(values))
    {
        if (base == 0)
            throw Error{"operation base must be positive"};
        if (arity == 0)
            throw Error{"operation arity must be positive"};
        if (_values.size() != indexer().count())
            throw Error{"operation table has " + std::to_string(_values.size()) + " entries, expected " + std::to_string(indexer().count())};
        for (size_t i = 0; i < _values.size(); ++i)
            if (_values[i] >= base)
                throw Error{"operation value " + std::to_string(_values[i]) + " at index " + std::to_string(i) + " out of range"};
    }

    auto OperationTable::projection(size_t base, size_t arity, size_t coordinate) -> OperationTable
    {
        if (coordinate >= arity)
            throw Error{"projection coordinate out of range"};
        TupleIndexer ix{base, arity};
        vector<Vertex> values(ix.count());
        for (size_t i = 0; i < values.size(); ++i)
            values[i] = ix.coordinate(i, coordinate);
        return OperationTable{base, arity, std::move(values)};
    }

    auto OperationTable::constant(size_t base, size_t arity, Vertex value) -> OperationTable
    {
        return OperationTable{base, arity, vector<Vertex>(TupleIndexer{base, arity}.count(), value)};
    }

    auto OperationTable::identity(size_t base) -> OperationTable
    {
        return projection(base, 1, 0);
    }

    auto OperationTable::lift(const OperationTable & g, size_t arity, size_t coordinate) -> OperationTable
    {
        if (g.arity() != 1)
            throw Error{"lift expects a unary operation"};
        auto p = projection(g.base(), arity, coordinate);
        return compose(g, p);
    }

    auto OperationTable::at(std::span<const Vertex> args) const -> Vertex
    {
        if (args.size() != _arity)
            throw Error{"wrong number of arguments"};
        return _values[indexer().encode(args)];
    }

    auto OperationTable::at(std::initializer_list<Vertex> args) const -> Vertex
    {
        return at(std::span<const Vertex>{args.begin(), args.size()});
    }

    auto OperationTable::image() const -> VertexSet
    {
        VertexSet result(_base);
        for (auto v : _values)
            result.set(v);
        return result;
    }

    auto compose(const OperationTable & g, const OperationTable & f) -> OperationTable
    {
        if (g.arity() != 1 || g.base() != f.base())
            throw Error{"compose expects a unary outer operation on the same base"};
        vector<Vertex> values(f.values().begin(), f.values().end());
        for (auto & v : values)
            v = g[v];
        return OperationTable{f.base(), f.arity(), std::move(values)};
    }
}
