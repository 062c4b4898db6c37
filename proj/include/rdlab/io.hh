#pragma once

#include <rdlab/digraph.hh>
#include <rdlab/operation.hh>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace rdlab
{
    /// ".dg": '#' comments, "n <count>", then one "<u> <v>" per line. Errors name the line.
    auto parse_digraph(std::istream & in, const std::string & name = "<input>") -> Digraph;
    auto read_digraph(const std::string & path) -> Digraph;
    /// Arcs sorted, loops omitted.
    void format_digraph(std::ostream & out, const Digraph & g);
    void write_digraph(const Digraph & g, const std::string & path);

    /// ".op": "n <base>", "k <arity>", then base^arity values in tuple order.
    auto parse_op(std::istream & in, const std::string & name = "<input>") -> OperationTable;
    auto read_op(const std::string & path) -> OperationTable;
    void format_op(std::ostream & out, const OperationTable & f);
    void write_op(const OperationTable & f, const std::string & path);

    /// FNV-1a over the canonical text form, as 16 hex digits.
    auto digest(const Digraph & g) -> std::string;
    auto digest(const OperationTable & f) -> std::string;
}
