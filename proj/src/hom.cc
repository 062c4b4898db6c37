#include <rdlab/hom.hh>

#include <algorithm>
#include <bit>

using std::size_t;
using std::span;
using std::vector;

namespace rdlab
{
    namespace
    {
        auto single(Domain d) -> bool
        {
            return d && ! (d & (d - 1));
        }

        auto low_mask(size_t count) -> Domain
        {
            return count >= 64 ? ~Domain{0} : (Domain{1} << count) - 1;
        }

        auto row_mask(const VertexSet & row) -> Domain
        {
            Domain d = 0;
            for (auto v = row.find_first(); v != VertexSet::npos; v = row.find_next(v))
                d |= Domain{1} << v;
            return d;
        }
    }

    struct HomSearch::Imp
    {
        size_t vars = 0, vals = 0;
        Domain full = 0;
        vector<vector<Vertex>> succ, pred;
        vector<Domain> out_mask, in_mask;

        vector<Domain> dom;
        vector<std::pair<Vertex, Domain>> trail;
        vector<Vertex> queue;
        vector<char> queued;

        VariableOrder order = VariableOrder::lexicographic;
        bool surjective = false;
        vector<Vertex> upper;

        SearchStats stats;
        std::optional<BudgetClock> clock;
        const HomVisitor * visitor = nullptr;
        vector<Vertex> solution;

        void set(Vertex v, Domain d)
        {
            if (d == dom[v])
                return;
            trail.emplace_back(v, dom[v]);
            dom[v] = d;
            if (! queued[v]) {
                queued[v] = 1;
                queue.push_back(v);
            }
        }

        void restore(size_t mark)
        {
            while (trail.size() > mark) {
                auto [v, d] = trail.back();
                trail.pop_back();
                dom[v] = d;
            }
            for (auto v : queue)
                queued[v] = 0;
            queue.clear();
        }

        auto arc_consistency() -> bool
        {
            while (! queue.empty()) {
                Vertex x = queue.back();
                queue.pop_back();
                queued[x] = 0;

                Domain so = 0, si = 0;
                for (Domain d = dom[x]; d; d &= d - 1) {
                    auto a = std::countr_zero(d);
                    so |= out_mask[a];
                    si |= in_mask[a];
                }
                if (so != full)
                    for (auto y : succ[x]) {
                        Domain nd = dom[y] & so;
                        if (nd != dom[y]) {
                            if (! nd)
                                return false;
                            set(y, nd);
                        }
                    }
                if (si != full)
                    for (auto z : pred[x]) {
                        Domain nd = dom[z] & si;
                        if (nd != dom[z]) {
                            if (! nd)
                                return false;
                            set(z, nd);
                        }
                    }
            }
            return true;
        }

        enum class LexResult
        {
            ok,
            changed,
            fail
        };

        auto lex_filter() -> LexResult
        {
            for (size_t i = 0; i < vars; ++i) {
                Domain d = dom[i];
                Vertex w = upper[i];
                if (single(d)) {
                    auto v = Vertex(std::countr_zero(d));
                    if (v < w)
                        return LexResult::ok;
                    if (v > w)
                        return LexResult::fail;
                    continue;
                }
                Domain nd = d & low_mask(w + 1);
                if (! nd)
                    return LexResult::fail;
                if (nd != d) {
                    set(Vertex(i), nd);
                    return LexResult::changed;
                }
                if (nd & low_mask(w))
                    return LexResult::ok;
            }
            // equal to the bound everywhere
            return LexResult::fail;
        }

        // Every value not yet forced must be matched to a distinct open variable.
        auto surjective_feasible() -> bool
        {
            Domain fixed = 0;
            size_t open = 0;
            for (auto d : dom) {
                if (single(d))
                    fixed |= d;
                else
                    ++open;
            }
            Domain missing = full & ~fixed;
            if (! missing)
                return true;
            if (size_t(std::popcount(missing)) > open)
                return false;

            vector<std::pair<Domain, size_t>> groups;
            groups.reserve(open);
            Domain coverable = 0;
            for (auto d : dom)
                if (! single(d)) {
                    Domain m = d & missing;
                    if (m) {
                        groups.emplace_back(m, 1);
                        coverable |= m;
                    }
                }
            if ((coverable & missing) != missing)
                return false;
            if (std::popcount(missing) == 1)
                return true;

            std::sort(groups.begin(), groups.end());
            size_t w = 0;
            for (size_t r = 0; r < groups.size(); ++r) {
                if (w > 0 && groups[w - 1].first == groups[r].first)
                    groups[w - 1].second += groups[r].second;
                else
                    groups[w++] = groups[r];
            }
            groups.resize(w);

            vector<int> owner(64, -1);
            vector<size_t> load(groups.size(), 0);
            vector<char> seen;

            std::function<bool(int)> augment = [&](int value) -> bool {
                for (size_t g = 0; g < groups.size(); ++g) {
                    if (! (groups[g].first >> value & 1) || seen[g])
                        continue;
                    seen[g] = 1;
                    if (load[g] < groups[g].second) {
                        ++load[g];
                        owner[value] = int(g);
                        return true;
                    }
                    for (int other = 0; other < 64; ++other)
                        if (owner[other] == int(g) && augment(other)) {
                            owner[value] = int(g);
                            return true;
                        }
                }
                return false;
            };

            for (Domain m = missing; m; m &= m - 1) {
                int value = std::countr_zero(m);
                seen.assign(groups.size(), 0);
                if (! augment(value))
                    return false;
            }
            return true;
        }

        auto fixpoint() -> bool
        {
            for (;;) {
                if (! arc_consistency())
                    return false;
                if (! upper.empty()) {
                    auto r = lex_filter();
                    if (r == LexResult::fail)
                        return false;
                    if (r == LexResult::changed)
                        continue;
                }
                break;
            }
            return ! surjective || surjective_feasible();
        }

        auto choose() -> std::optional<Vertex>
        {
            std::optional<Vertex> best;
            int best_size = 65;
            for (Vertex v = 0; v < vars; ++v) {
                Domain d = dom[v];
                if (single(d))
                    continue;
                if (order == VariableOrder::lexicographic)
                    return v;
                int s = std::popcount(d);
                if (s < best_size) {
                    best = v;
                    best_size = s;
                    if (s == 2)
                        break;
                }
            }
            return best;
        }

        auto search() -> bool
        {
            if (! clock->tick(stats))
                return false;

            auto branch = choose();
            if (! branch) {
                for (size_t v = 0; v < vars; ++v)
                    solution[v] = Vertex(std::countr_zero(dom[v]));
                return (*visitor)(solution);
            }

            Vertex v = *branch;
            Domain d = dom[v];
            for (; d; d &= d - 1) {
                Domain choice = d & -d;
                if (! (dom[v] & choice))
                    continue;
                size_t mark = trail.size();
                set(v, choice);
                if (fixpoint()) {
                    if (! search()) {
                        restore(mark);
                        return false;
                    }
                }
                else
                    ++stats.prunes;
                restore(mark);
            }
            return true;
        }
    };

    HomSearch::HomSearch(const Digraph & source, const Digraph & target) :
        _imp(std::make_unique<Imp>())
    {
        if (target.size() > max_target_size)
            throw Error{"homomorphism targets are limited to " + std::to_string(max_target_size) + " vertices"};
        auto & s = *_imp;
        s.vars = source.size();
        s.vals = target.size();
        s.full = low_mask(s.vals);
        s.succ.resize(s.vars);
        s.pred.resize(s.vars);
        for (auto [x, y] : source.arcs())
            if (x != y) {
                s.succ[x].push_back(y);
                s.pred[y].push_back(x);
            }
        for (Vertex a = 0; a < s.vals; ++a) {
            s.out_mask.push_back(row_mask(target.out_row(a)));
            s.in_mask.push_back(row_mask(target.in_row(a)));
        }
        s.dom.assign(s.vars, s.full);
        s.queued.assign(s.vars, 0);
        s.solution.assign(s.vars, 0);

        // a source loop needs a target loop
        for (Vertex x = 0; x < s.vars; ++x)
            if (source.has_arc(x, x)) {
                Domain looped = 0;
                for (Vertex a = 0; a < s.vals; ++a)
                    if (target.has_arc(a, a))
                        looped |= Domain{1} << a;
                s.dom[x] &= looped;
            }
    }

    HomSearch::~HomSearch() = default;
    HomSearch::HomSearch(HomSearch &&) noexcept = default;

    void HomSearch::restrict_domain(Vertex v, Domain allowed)
    {
        if (v >= _imp->vars)
            throw Error{"restricted vertex " + std::to_string(v) + " out of range"};
        _imp->dom[v] &= allowed;
    }

    void HomSearch::pin(Vertex v, Vertex value)
    {
        if (value >= _imp->vals)
            throw Error{"pinned value " + std::to_string(value) + " out of range"};
        restrict_domain(v, Domain{1} << value);
    }

    void HomSearch::pin(const Pinning & pins)
    {
        VertexSet seen(_imp->vars);
        for (auto [v, value] : pins) {
            if (v < _imp->vars && seen.test(v))
                throw Error{"vertex " + std::to_string(v) + " pinned twice"};
            pin(v, value);
            seen.set(v);
        }
    }

    void HomSearch::set_order(VariableOrder order)
    {
        _imp->order = order;
    }

    void HomSearch::set_require_surjective(bool on)
    {
        _imp->surjective = on;
    }

    void HomSearch::set_strict_upper_bound(span<const Vertex> bound)
    {
        if (bound.size() != _imp->vars)
            throw Error{"upper bound has the wrong length"};
        _imp->upper.assign(bound.begin(), bound.end());
        // takes effect at the next propagation
    }

    auto HomSearch::run(const HomVisitor & visitor, const Budget & budget) -> SearchStats
    {
        auto & s = *_imp;
        s.stats = SearchStats{};
        s.clock.emplace(budget);
        s.visitor = &visitor;
        s.trail.clear();

        bool consistent = true;
        for (auto d : s.dom)
            if (! d)
                consistent = false;

        if (consistent) {
            for (Vertex v = 0; v < s.vars; ++v) {
                s.queued[v] = 1;
                s.queue.push_back(v);
            }
            if (s.fixpoint())
                s.search();
            s.restore(0);
        }

        s.stats.elapsed_seconds = s.clock->elapsed();
        return s.stats;
    }

    auto is_homomorphism(const Digraph & h, const Digraph & g, span<const Vertex> map) -> bool
    {
        if (map.size() != h.size())
            return false;
        for (auto v : map)
            if (v >= g.size())
                return false;
        for (auto [x, y] : h.arcs())
            if (! g.has_arc(map[x], map[y]))
                return false;
        return true;
    }

    auto enumerate_homs(const Digraph & h, const Digraph & g, const Pinning & pins, const HomVisitor & visitor,
        const Budget & budget, VariableOrder order) -> SearchStats
    {
        HomSearch search{h, g};
        search.pin(pins);
        search.set_order(order);
        return search.run(visitor, budget);
    }

    auto count_homs(const Digraph & h, const Digraph & g, const Pinning & pins, const Budget & budget) -> std::uint64_t
    {
        std::uint64_t count = 0;
        auto stats = enumerate_homs(h, g, pins, [&](span<const Vertex>) { ++count; return true; }, budget);
        if (! stats.complete())
            throw SearchIncomplete{stats};
        return count;
    }

    auto endomorphisms(const Digraph & g, const Budget & budget) -> vector<OperationTable>
    {
        vector<OperationTable> result;
        auto stats = enumerate_homs(g, g, {}, [&](span<const Vertex> m) {
            result.emplace_back(g.size(), 1, vector<Vertex>(m.begin(), m.end()));
            return true;
        }, budget);
        if (! stats.complete())
            throw SearchIncomplete{stats};
        return result;
    }

    auto hom_arc(const Digraph & source, const Digraph & target, span<const Vertex> f, span<const Vertex> g) -> bool
    {
        for (Vertex x = 0; x < source.size(); ++x)
            for (auto y = source.out_row(x).find_first(); y != VertexSet::npos; y = source.out_row(x).find_next(y))
                if (! target.has_arc(f[x], g[y]))
                    return false;
        return true;
    }

    auto HomDigraph::index_of(span<const Vertex> map) const -> std::optional<size_t>
    {
        auto it = std::lower_bound(maps.begin(), maps.end(), map, [](const vector<Vertex> & a, span<const Vertex> b) {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
        if (it != maps.end() && std::equal(it->begin(), it->end(), map.begin(), map.end()))
            return size_t(it - maps.begin());
        return std::nullopt;
    }

    auto hom_digraph(const Digraph & h, const Digraph & g, const Budget & budget) -> HomDigraph
    {
        HomDigraph result;
        auto stats = enumerate_homs(h, g, {}, [&](span<const Vertex> m) {
            result.maps.emplace_back(m.begin(), m.end());
            return true;
        }, budget);
        if (! stats.complete())
            throw SearchIncomplete{stats};

        vector<Arc> arcs;
        for (size_t f = 0; f < result.maps.size(); ++f)
            for (size_t k = 0; k < result.maps.size(); ++k)
                if (hom_arc(h, g, result.maps[f], result.maps[k]))
                    arcs.emplace_back(Vertex(f), Vertex(k));
        // Digraph adds loops; the rule holds for f = f on reflexive inputs, so nothing is invented
        result.graph = Digraph{result.maps.size(), arcs};
        return result;
    }

    auto identity_status(const Digraph & g, const Budget & budget) -> IdentityStatus
    {
        IdentityStatus result;
        result.homs = hom_digraph(g, g, budget);

        vector<Vertex> id(g.size());
        for (Vertex v = 0; v < g.size(); ++v)
            id[v] = v;
        result.identity = *result.homs.index_of(id);

        const auto & hg = result.homs.graph;
        auto i = Vertex(result.identity);
        for (Vertex f = 0; f < hg.size(); ++f)
            if (f != i && (hg.has_arc(i, f) || hg.has_arc(f, i)))
                result.neighbors.push_back(f);

        auto weak = weak_components(hg);
        for (auto v : weak.blocks[weak.block_of[i]])
            result.weak_component.push_back(v);
        auto strong = strong_components(hg);
        for (auto v : strong.blocks[strong.block_of[i]])
            result.strong_component.push_back(v);

        result.isolated_loop = result.neighbors.empty();
        result.alone_weak = result.weak_component.size() == 1;
        result.alone_strong = result.strong_component.size() == 1;
        return result;
    }
}
