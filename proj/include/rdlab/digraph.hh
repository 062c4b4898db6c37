#pragma once

#include <rdlab/budget.hh>

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rdlab
{
    using Vertex = std::uint32_t;
    using Arc = std::pair<Vertex, Vertex>;
    using VertexSet = boost::dynamic_bitset<std::uint64_t>;

    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /**
     * A finite reflexive digraph on vertices 0..n-1, stored as dense
     * out- and in-adjacency bit rows. Every vertex carries a loop; the
     * constructor adds any that are missing. Values are immutable.
     */
    class Digraph
    {
    public:
        Digraph() = default;

        /// Throws Error naming the offending pair if an endpoint is out of range.
        Digraph(std::size_t n, std::span<const Arc> arcs);
        Digraph(std::size_t n, std::initializer_list<Arc> arcs);

        [[nodiscard]] auto size() const -> std::size_t { return _out.size(); }
        [[nodiscard]] auto has_arc(Vertex u, Vertex v) const -> bool { return _out[u].test(v); }
        [[nodiscard]] auto out_row(Vertex u) const -> const VertexSet & { return _out[u]; }
        [[nodiscard]] auto in_row(Vertex v) const -> const VertexSet & { return _in[v]; }

        /// Arc count including loops.
        [[nodiscard]] auto arc_count() const -> std::size_t { return _arc_count; }

        /// All arcs including loops, lexicographically sorted.
        [[nodiscard]] auto arcs() const -> std::vector<Arc>;

        [[nodiscard]] auto out_degree(Vertex u) const -> std::size_t { return _out[u].count(); }
        [[nodiscard]] auto in_degree(Vertex v) const -> std::size_t { return _in[v].count(); }

        [[nodiscard]] auto is_symmetric() const -> bool;

        friend auto operator==(const Digraph &, const Digraph &) -> bool;

    private:
        std::vector<VertexSet> _out, _in;
        std::size_t _arc_count = 0;

        void build(std::size_t n, std::span<const Arc> arcs);
    };

    /**
     * Mixed-radix coordinates of a vertex of G^k. Index order is row-major:
     * the first coordinate is the most significant digit.
     */
    struct TupleIndexer
    {
        std::size_t base = 1;
        std::size_t arity = 1;

        [[nodiscard]] auto count() const -> std::size_t;
        [[nodiscard]] auto encode(std::span<const Vertex> coords) const -> std::size_t;
        [[nodiscard]] auto decode(std::size_t index) const -> std::vector<Vertex>;
        [[nodiscard]] auto coordinate(std::size_t index, std::size_t position) const -> Vertex;
        /// Index of the constant tuple (x, x, ..., x).
        [[nodiscard]] auto diagonal(Vertex x) const -> std::size_t;
    };

    auto product(const Digraph & g, const Digraph & h) -> Digraph;
    auto power(const Digraph & g, std::size_t k) -> Digraph;
    auto symmetrization(const Digraph & g) -> Digraph;

    /// Relabels S to 0..|S|-1 in the order given. Throws on empty or repeated S.
    auto induced(const Digraph & g, std::span<const Vertex> subset) -> Digraph;

    struct ComponentPartition
    {
        std::vector<std::size_t> block_of;
        std::vector<std::vector<Vertex>> blocks;
        /// For strong components: below[a].test(b) iff block a ⊑ block b,
        /// i.e. some vertex of b is reachable from a. Reflexive and transitive.
        /// Empty for weak components.
        std::vector<VertexSet> below;

        [[nodiscard]] auto size() const -> std::size_t { return blocks.size(); }
        [[nodiscard]] auto minimal_blocks() const -> std::vector<std::size_t>;
        [[nodiscard]] auto maximal_blocks() const -> std::vector<std::size_t>;
    };

    /// Blocks are numbered by their least vertex.
    auto weak_components(const Digraph & g) -> ComponentPartition;
    auto strong_components(const Digraph & g) -> ComponentPartition;

    /// Reachability closure: row u holds every vertex reachable from u (including u).
    auto reachability(const Digraph & g) -> std::vector<VertexSet>;

    struct EmbeddingOptions
    {
        std::size_t limit = std::numeric_limits<std::size_t>::max();
        Budget budget{};
        /// Extra per-assignment filter; called with the source vertex, its
        /// proposed image and the images of source vertices 0..v-1.
        std::function<bool(Vertex, Vertex, std::span<const Vertex>)> accept;
    };

    struct EmbeddingResult
    {
        std::vector<std::vector<Vertex>> maps;
        SearchStats stats;
    };

    /**
     * Induced embeddings of h into g in lexicographic order of the image
     * tuple (e(0), e(1), ...). Stops after options.limit maps.
     */
    auto find_embeddings(const Digraph & h, const Digraph & g, const EmbeddingOptions & options = {}) -> EmbeddingResult;

    /// Independent check that e is injective and reflects arcs both ways.
    auto is_induced_embedding(const Digraph & h, const Digraph & g, std::span<const Vertex> e) -> bool;
}
