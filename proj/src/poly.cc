#include <rdlab/families.hh>
#include <rdlab/poly.hh>
#include <rdlab/topology.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

using std::optional;
using std::size_t;
using std::span;
using std::vector;

namespace rdlab
{
    auto to_string(OperationKind k) -> std::string
    {
        switch (k) {
        case OperationKind::projection: return "projection";
        case OperationKind::essentially_unary: return "essentially_unary";
        case OperationKind::essential: return "essential";
        }
        return "?";
    }

    auto to_string(PreservationMode m) -> std::string
    {
        return m == PreservationMode::exhaustive ? "exhaustive" : "violation-search";
    }

    auto Classification::describe() const -> std::string
    {
        if (kind != OperationKind::essential)
            return to_string(kind) + "(" + std::to_string(coordinate + 1) + ")";
        std::string s = "essential(";
        for (size_t i = 0; i < essential.size(); ++i)
            s += (i ? "," : "") + std::to_string(essential[i] + 1);
        return s + ")";
    }

    auto classify(const OperationTable & f) -> Classification
    {
        Classification c;
        const size_t n = f.base(), k = f.arity();
        const auto ix = f.indexer();
        const size_t cells = ix.count();

        c.surjective = f.image().count() == n;
        c.idempotent = true;
        for (Vertex x = 0; x < n; ++x)
            if (f[ix.diagonal(x)] != x)
                c.idempotent = false;

        vector<size_t> stride(k, 1);
        for (size_t i = k - 1; i-- > 0;)
            stride[i] = stride[i + 1] * n;

        for (size_t i = 0; i < k; ++i) {
            bool depends = false;
            for (size_t idx = 0; idx < cells && ! depends; ++idx) {
                size_t digit = (idx / stride[i]) % n;
                if (f[idx] != f[idx - digit * stride[i]])
                    depends = true;
            }
            if (depends)
                c.essential.push_back(i);
        }

        if (c.essential.size() >= 2) {
            c.kind = OperationKind::essential;
            return c;
        }

        c.coordinate = c.essential.empty() ? 0 : c.essential.front();
        vector<Vertex> g(n);
        for (Vertex x = 0; x < n; ++x)
            g[x] = f[x * stride[c.coordinate]];
        // f(x) = g(x_i) must hold for every fixing of the other coordinates
        for (size_t idx = 0; idx < cells; ++idx)
            if (f[idx] != g[(idx / stride[c.coordinate]) % n])
                throw std::logic_error{"classify: unary recovery disagrees with table"};

        c.unary = OperationTable{n, 1, g};
        c.kind = *c.unary == OperationTable::identity(n) ? OperationKind::projection : OperationKind::essentially_unary;
        return c;
    }

    auto is_polymorphism(const Digraph & g, const OperationTable & f) -> bool
    {
        if (f.base() != g.size())
            throw Error{"operation base " + std::to_string(f.base()) + " does not match digraph size " + std::to_string(g.size())};

        const auto arcs = g.arcs();
        const size_t k = f.arity(), n = g.size(), e = arcs.size();
        vector<size_t> pos(k, 0);
        for (;;) {
            size_t s = 0, t = 0;
            for (size_t i = 0; i < k; ++i) {
                s = s * n + arcs[pos[i]].first;
                t = t * n + arcs[pos[i]].second;
            }
            if (! g.has_arc(f[s], f[t]))
                return false;

            size_t i = k;
            while (i > 0 && ++pos[i - 1] == e)
                pos[--i] = 0;
            if (i == 0)
                return true;
        }
    }

    Relation::Relation(size_t b, size_t a, vector<vector<Vertex>> ts) :
        base(b), arity(a), tuples(std::move(ts))
    {
        for (auto & t : tuples) {
            if (t.size() != arity)
                throw Error{"relation tuple has the wrong arity"};
            for (auto v : t)
                if (v >= base)
                    throw Error{"relation tuple entry out of range"};
        }
        std::sort(tuples.begin(), tuples.end());
        tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    }

    auto Relation::contains(span<const Vertex> t) const -> bool
    {
        return std::binary_search(tuples.begin(), tuples.end(), t, [](const auto & a, const auto & b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    }

    namespace
    {
        auto injective(span<const Vertex> t, size_t base) -> bool
        {
            VertexSet seen(base);
            for (auto v : t) {
                if (seen.test(v))
                    return false;
                seen.set(v);
            }
            return true;
        }

        auto falling_factorial(size_t n) -> size_t
        {
            size_t r = 1;
            for (size_t i = 2; i <= n; ++i)
                r *= i;
            return r;
        }
    }

    auto Relation::is_slupecki() const -> bool
    {
        if (arity != base || base < 2)
            return false;
        if (tuples.size() != TupleIndexer{base, base}.count() - falling_factorial(base))
            return false;
        return std::none_of(tuples.begin(), tuples.end(), [&](const auto & t) { return injective(t, base); });
    }

    auto slupecki_relation(size_t n) -> Relation
    {
        if (n < 2)
            throw Error{"the Słupecki relation needs n ≥ 2"};
        if (n > 8)
            throw Error{"slupecki_relation: n too large to materialise"};
        TupleIndexer ix{n, n};
        vector<vector<Vertex>> tuples;
        for (size_t idx = 0; idx < ix.count(); ++idx) {
            auto t = ix.decode(idx);
            if (! injective(t, n))
                tuples.push_back(std::move(t));
        }
        return Relation{n, n, std::move(tuples)};
    }

    namespace
    {
        auto preserves_exhaustive(const OperationTable & f, const Relation & r, const Budget & budget) -> Preservation
        {
            Preservation result;
            result.mode = PreservationMode::exhaustive;
            BudgetClock clock{budget};
            const bool theta = r.is_slupecki();
            const size_t k = f.arity(), rows = r.arity, m = r.size();

            if (m == 0) {
                result.holds = true;
                return result;
            }

            vector<size_t> pos(k, 0);
            vector<Vertex> args(k), image(rows);
            for (;;) {
                if (! clock.tick(result.stats)) {
                    result.stats.elapsed_seconds = clock.elapsed();
                    return result;
                }
                for (size_t row = 0; row < rows; ++row) {
                    for (size_t c = 0; c < k; ++c)
                        args[c] = r.tuples[pos[c]][row];
                    image[row] = f.at(args);
                }
                bool inside = theta ? ! injective(image, r.base) : r.contains(image);
                if (! inside) {
                    result.holds = false;
                    for (auto p : pos)
                        result.counterexample.push_back(r.tuples[p]);
                    result.stats.elapsed_seconds = clock.elapsed();
                    return result;
                }

                size_t i = k;
                while (i > 0 && ++pos[i - 1] == m)
                    pos[--i] = 0;
                if (i == 0)
                    break;
            }
            result.holds = true;
            result.stats.elapsed_seconds = clock.elapsed();
            return result;
        }

        // Picks one preimage row per value (row v maps to v) so that every
        // column repeats an entry; such a matrix witnesses non-preservation of θ.
        struct ViolationSearch
        {
            const OperationTable & f;
            size_t n, k;
            vector<vector<size_t>> preimages;
            // column_values[w][j]: values coordinate j takes over preimages of w
            vector<vector<Domain>> column_values;
            vector<size_t> chosen;
            vector<Domain> used;
            BudgetClock clock;
            Preservation result;

            ViolationSearch(const OperationTable & op, const Budget & b) :
                f(op), n(op.base()), k(op.arity()), clock(b)
            {
                preimages.resize(n);
                column_values.assign(n, vector<Domain>(k, 0));
                auto ix = f.indexer();
                for (size_t idx = 0; idx < ix.count(); ++idx) {
                    preimages[f[idx]].push_back(idx);
                    for (size_t j = 0; j < k; ++j)
                        column_values[f[idx]][j] |= Domain{1} << ix.coordinate(idx, j);
                }
                used.assign(k, 0);
            }

            auto repeated(size_t j, size_t rows) const -> bool
            {
                return size_t(std::popcount(used[j])) < rows;
            }

            // every column lacking a repeat must still be able to get one
            auto feasible(size_t next_row) const -> bool
            {
                for (size_t j = 0; j < k; ++j) {
                    if (repeated(j, next_row))
                        continue;
                    bool possible = false;
                    Domain seen = 0;
                    for (size_t w = next_row; w < n && ! possible; ++w) {
                        Domain c = column_values[w][j];
                        if ((c & used[j]) || (c & seen) || std::popcount(c) > 1)
                            possible = (c & used[j]) || (c & seen) || (w + 1 < n);
                        seen |= c;
                    }
                    if (! possible)
                        return false;
                }
                return true;
            }

            auto search(size_t row) -> bool
            {
                if (! clock.tick(result.stats))
                    return false;
                if (row == n) {
                    for (size_t j = 0; j < k; ++j)
                        if (! repeated(j, n))
                            return true;
                    return false; // found
                }

                auto ix = f.indexer();
                auto candidates = preimages[row];
                // prefer rows that repeat an entry in a column still lacking one
                auto score = [&](size_t idx) {
                    int s = 0;
                    for (size_t j = 0; j < k; ++j)
                        if (! repeated(j, row) && (used[j] >> ix.coordinate(idx, j) & 1))
                            ++s;
                    return s;
                };
                std::stable_sort(candidates.begin(), candidates.end(), [&](size_t a, size_t b) { return score(a) > score(b); });

                for (auto idx : candidates) {
                    auto saved = used;
                    for (size_t j = 0; j < k; ++j)
                        used[j] |= Domain{1} << ix.coordinate(idx, j);
                    chosen[row] = idx;
                    // a column with a duplicate already keeps popcount < row+1
                    if (feasible(row + 1)) {
                        if (! search(row + 1))
                            return false;
                    }
                    else
                        ++result.stats.prunes;
                    used = saved;
                }
                return true;
            }

            auto run() -> Preservation
            {
                result.mode = PreservationMode::violation_search;
                for (auto & p : preimages)
                    if (p.empty()) {
                        result.holds = true;
                        return result;
                    }
                chosen.assign(n, 0);
                bool exhausted = search(0);
                result.stats.elapsed_seconds = clock.elapsed();
                if (exhausted) {
                    result.holds = true;
                    return result;
                }
                if (! result.stats.complete())
                    return result;

                result.holds = false;
                auto ix = f.indexer();
                for (size_t j = 0; j < k; ++j) {
                    vector<Vertex> column(n);
                    for (size_t row = 0; row < n; ++row)
                        column[row] = ix.coordinate(chosen[row], j);
                    result.counterexample.push_back(std::move(column));
                }
                return result;
            }
        };
    }

    auto preserves_relation(const OperationTable & f, const Relation & r, const Budget & budget, std::uint64_t exhaustive_limit) -> Preservation
    {
        if (f.base() != r.base)
            throw Error{"operation and relation bases differ"};

        const bool theta = r.is_slupecki();
        long double choices = 1;
        for (size_t i = 0; i < f.arity(); ++i)
            choices *= static_cast<long double>(r.size());

        if (theta && (r.base >= 5 || choices > exhaustive_limit) && r.base <= max_target_size)
            return ViolationSearch{f, budget}.run();
        return preserves_exhaustive(f, r, budget);
    }

    namespace
    {
        auto is_witness(const Classification & c, bool idempotent_search) -> bool
        {
            return idempotent_search ? c.kind != OperationKind::projection : (c.surjective && c.kind == OperationKind::essential);
        }

        auto run_decider(const Digraph & g, size_t k, const DeciderOptions & options, bool idempotent_search) -> Verdict
        {
            if (k < 2)
                throw Error{"arity must be at least 2"};

            Verdict v;
            v.property = idempotent_search ? "idempotent-trivial" : "slupecki";
            v.arity = k;

            const size_t n = g.size();
            const Digraph pg = power(g, k);
            const TupleIndexer ix{n, k};

            auto make_search = [&]() {
                HomSearch s{pg, g};
                if (idempotent_search)
                    for (Vertex x = 0; x < n; ++x)
                        s.pin(Vertex(ix.diagonal(x)), x);
                else
                    s.set_require_surjective(true);
                s.set_order(options.order);
                return s;
            };

            auto finish = [&](optional<vector<Vertex>> found) {
                if (found) {
                    v.holds = false;
                    v.witness = OperationTable{n, k, std::move(*found)};
                    v.witness_class = classify(*v.witness);
                }
                else if (v.stats.complete())
                    v.holds = true;
                return v;
            };

            if (options.threads <= 1) {
                HomSearch s = make_search();
                optional<vector<Vertex>> best;
                v.stats = s.run([&](span<const Vertex> table) {
                    if (! is_witness(classify(OperationTable{n, k, {table.begin(), table.end()}}), idempotent_search))
                        return true;
                    best.emplace(table.begin(), table.end());
                    if (! options.canonical)
                        return false;
                    s.set_strict_upper_bound(table);
                    return true;
                }, options.budget);
                v.canonical = options.canonical && v.stats.complete();
                return finish(std::move(best));
            }

            // split on the first free cell; any witness ends the search
            const auto split = Vertex(idempotent_search && n > 1 ? 1 : 0);
            std::atomic<bool> stop{false};
            std::atomic<Vertex> next{0};
            std::mutex lock;
            optional<vector<Vertex>> found;
            vector<SearchStats> worker_stats(options.threads);

            auto work = [&](size_t id) {
                for (Vertex value; ! stop && (value = next++) < n;) {
                    HomSearch s = make_search();
                    if (idempotent_search && split == ix.diagonal(0) && value != 0)
                        continue;
                    s.restrict_domain(split, Domain{1} << value);
                    Budget b = options.budget;
                    b.cancel = &stop;
                    auto st = s.run([&](span<const Vertex> table) {
                        if (! is_witness(classify(OperationTable{n, k, {table.begin(), table.end()}}), idempotent_search))
                            return true;
                        std::scoped_lock guard{lock};
                        if (! found)
                            found.emplace(table.begin(), table.end());
                        stop = true;
                        return false;
                    }, b);
                    worker_stats[id].merge(st);
                }
            };

            vector<std::thread> workers;
            for (size_t t = 0; t < options.threads; ++t)
                workers.emplace_back(work, t);
            for (auto & w : workers)
                w.join();

            for (auto & st : worker_stats) {
                // cancellation after a witness is not a budget failure
                if (found && st.status == BudgetStatus::cancelled)
                    st.status = BudgetStatus::complete;
                v.stats.merge(st);
            }
            v.canonical = false;
            return finish(std::move(found));
        }
    }

    auto k_slupecki(const Digraph & g, size_t k, const DeciderOptions & options) -> Verdict
    {
        auto v = run_decider(g, k, options, false);
        verify_witness(g, v);
        return v;
    }

    auto k_idempotent_trivial(const Digraph & g, size_t k, const DeciderOptions & options) -> Verdict
    {
        auto v = run_decider(g, k, options, true);
        verify_witness(g, v);
        return v;
    }

    void verify_witness(const Digraph & g, const Verdict & v)
    {
        if (v.holds == false && ! v.witness)
            throw std::logic_error{"negative verdict without witness"};
        if (! v.witness)
            return;
        const auto & w = *v.witness;
        if (w.arity() != v.arity || ! is_polymorphism(g, w))
            throw std::logic_error{"witness is not a polymorphism of the stated arity"};
        auto c = classify(w);
        if (v.property == "slupecki" && ! (c.surjective && c.kind == OperationKind::essential))
            throw std::logic_error{"Słupecki witness is not an onto essential operation"};
        if (v.property == "idempotent-trivial" && ! (c.idempotent && c.kind != OperationKind::projection))
            throw std::logic_error{"idempotent-triviality witness is not an idempotent non-projection"};
    }

    auto embedding_condition(const Digraph & g, const OperationTable & f, const Budget & budget) -> EmbeddingCondition
    {
        if (f.arity() < 2)
            throw Error{"embedding condition needs arity at least 2"};
        if (! is_polymorphism(g, f))
            throw Error{"operation is not a polymorphism"};
        if (! classify(f).surjective)
            throw Error{"operation is not surjective"};

        auto pg = power(g, f.arity());
        EmbeddingOptions opts;
        opts.limit = 1;
        opts.budget = budget;
        // f∘e onto G means f takes pairwise distinct values on the image
        opts.accept = [&](Vertex, Vertex t, span<const Vertex> before) {
            return std::none_of(before.begin(), before.end(), [&](Vertex u) { return f[u] == f[t]; });
        };
        auto r = find_embeddings(g, pg, opts);

        EmbeddingCondition result;
        result.stats = r.stats;
        if (! r.maps.empty())
            result.embedding = std::move(r.maps.front());
        return result;
    }

    namespace
    {
        auto check_endomorphism(const Digraph & g, const OperationTable & f) -> void
        {
            if (f.arity() != 1 || f.base() != g.size())
                throw Error{"expected a unary operation on the digraph's vertices"};
            if (! is_homomorphism(g, g, f.values()))
                throw Error{"operation is not an endomorphism"};
            if (f == OperationTable::identity(g.size()))
                throw Error{"the endomorphism must differ from the identity"};
        }

        auto binary_table(size_t n, const std::function<Vertex(Vertex, Vertex)> & rule) -> OperationTable
        {
            vector<Vertex> values(n * n);
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = 0; y < n; ++y)
                    values[x * n + y] = rule(x, y);
            return OperationTable{n, 2, std::move(values)};
        }
    }

    auto min_component_witness(const Digraph & g, const OperationTable & r) -> OperationTable
    {
        check_endomorphism(g, r);
        auto sc = strong_components(g);
        if (sc.size() == 1)
            throw Error{"digraph is strongly connected"};

        auto id = OperationTable::identity(g.size());
        bool forward = hom_arc(g, g, id.values(), r.values());
        bool backward = hom_arc(g, g, r.values(), id.values());
        if (! forward && ! backward)
            throw Error{"r is not adjacent to the identity in Hom(G,G)"};

        size_t block = forward ? sc.minimal_blocks().front() : sc.maximal_blocks().front();
        auto f = binary_table(g.size(), [&](Vertex x, Vertex y) { return sc.block_of[x] == block ? y : r[y]; });

        auto c = classify(f);
        if (! is_polymorphism(g, f) || ! c.surjective || c.essential.size() != 2)
            throw std::logic_error{"min_component_witness: construction failed verification"};
        return f;
    }

    auto neighbor_idempotent_witness(const Digraph & g, const OperationTable & f) -> OperationTable
    {
        check_endomorphism(g, f);
        const size_t n = g.size();
        auto id = OperationTable::identity(n);
        bool up = hom_arc(g, g, id.values(), f.values());
        bool down = hom_arc(g, g, f.values(), id.values());
        if (! up && ! down)
            throw Error{"f is not adjacent to the identity in Hom(G,G)"};

        auto valid = [&](const OperationTable & phi) {
            auto c = classify(phi);
            return c.idempotent && c.kind != OperationKind::projection && is_polymorphism(g, phi);
        };

        if (is_poset(g)) {
            // up: x ≤ f(x) everywhere; take a maximal moved point a, whose image is its unique upper cover.
            // down is dual.
            vector<Vertex> moved;
            for (Vertex x = 0; x < n; ++x)
                if (f[x] != x)
                    moved.push_back(x);
            auto extreme = [&](Vertex a) {
                return std::none_of(moved.begin(), moved.end(), [&](Vertex b) {
                    return b != a && (up ? g.has_arc(a, b) : g.has_arc(b, a));
                });
            };
            Vertex a = *std::find_if(moved.begin(), moved.end(), extreme);
            Vertex b = f[a];
            auto shifted = [&](Vertex y) { return y == a ? b : y; };
            auto phi = binary_table(n, [&](Vertex x, Vertex y) {
                bool near = up ? g.has_arc(x, a) : g.has_arc(a, x);
                return near ? y : shifted(y);
            });
            if (! valid(phi))
                throw std::logic_error{"poset construction failed verification"};
            return phi;
        }

        if (g.is_symmetric()) {
            optional<Vertex> fixed;
            for (Vertex x = 0; x < n && ! fixed; ++x)
                if (f[x] == x)
                    fixed = x;
            if (! fixed)
                throw Error{"f has no fixed point"};
            auto phi = binary_table(n, [&](Vertex x, Vertex y) { return x == *fixed ? f[y] : y; });
            if (! valid(phi))
                throw std::logic_error{"symmetric construction failed verification"};
            return phi;
        }

        if (is_intransitive(g)) {
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = 0; y < n; ++y) {
                    if (x == y || ! (g.has_arc(x, y) || g.has_arc(y, x)) || f[x] != x || f[y] != x)
                        continue;
                    auto phi = binary_table(n, [&](Vertex u, Vertex v) { return (v == y && u != y) ? x : v; });
                    if (valid(phi))
                        return phi;
                }
            throw Error{"no collapsed edge of f yields an idempotent witness"};
        }

        throw Error{"digraph is neither a poset, symmetric, nor intransitive"};
    }
}
