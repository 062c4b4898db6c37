#include <rdlab/families.hh>
#include <rdlab/gadgets.hh>
#include <rdlab/poly.hh>

#include <algorithm>
#include <set>
#include <string>

using std::size_t;
using std::span;
using std::vector;

namespace rdlab
{
    void GadgetSpec::validate() const
    {
        VertexSet seen(k.size());
        for (auto p : pins) {
            if (p >= k.size())
                throw Error{"gadget pin " + std::to_string(p) + " out of range"};
            if (seen.test(p))
                throw Error{"gadget pin " + std::to_string(p) + " repeated"};
            seen.set(p);
        }
        if (u >= k.size())
            throw Error{"gadget output " + std::to_string(u) + " out of range"};
    }

    auto GadgetSpec::output_is_pin() const -> bool
    {
        return std::find(pins.begin(), pins.end(), u) != pins.end();
    }

    namespace
    {
        auto exists_hom(HomSearch & s, const Budget & budget, SearchStats & total) -> bool
        {
            bool found = false;
            auto st = s.run([&](span<const Vertex>) {
                found = true;
                return false;
            }, budget);
            total.merge(st);
            if (! found && ! st.complete())
                throw SearchIncomplete{st};
            return found;
        }

        auto pp_set(const Digraph & g, const GadgetSpec & gadget, span<const Vertex> values, const Budget & budget,
            SearchStats & stats) -> VertexSet
        {
            if (values.size() != gadget.pins.size())
                throw Error{"pinning must assign every pin"};
            for (auto v : values)
                if (v >= g.size())
                    throw Error{"pin value out of range"};

            VertexSet result(g.size());
            auto base = [&]() {
                HomSearch s{gadget.k, g};
                for (size_t i = 0; i < values.size(); ++i)
                    s.pin(gadget.pins[i], values[i]);
                return s;
            };

            if (gadget.output_is_pin()) {
                auto pos = std::find(gadget.pins.begin(), gadget.pins.end(), gadget.u) - gadget.pins.begin();
                auto s = base();
                if (exists_hom(s, budget, stats))
                    result.set(values[pos]);
                return result;
            }

            for (Vertex v = 0; v < g.size(); ++v) {
                auto s = base();
                s.pin(gadget.u, v);
                if (exists_hom(s, budget, stats))
                    result.set(v);
            }
            return result;
        }
    }

    auto pp_defined_set(const Digraph & g, const GadgetSpec & gadget, span<const Vertex> pin_values, const Budget & budget) -> VertexSet
    {
        gadget.validate();
        SearchStats stats;
        return pp_set(g, gadget, pin_values, budget, stats);
    }

    auto verify_uniform_gadget(const Digraph & g, const GadgetSpec & gadget, const Budget & budget) -> UniformGadgetCertificate
    {
        gadget.validate();
        const size_t n = g.size(), t = gadget.pins.size();
        UniformGadgetCertificate cert;
        cert.co_singletons.assign(n, std::nullopt);
        TupleIndexer ix{n, t};
        cert.pinnings_total = t == 0 ? 1 : ix.count();
        BudgetClock clock{budget};

        cert.proper_everywhere = true;
        for (size_t idx = 0; idx < cert.pinnings_total; ++idx) {
            vector<Vertex> pinning = t == 0 ? vector<Vertex>{} : ix.decode(idx);
            VertexSet set;
            try {
                set = pp_set(g, gadget, pinning, budget, cert.stats);
            }
            catch (const SearchIncomplete & e) {
                cert.stats.status = e.stats.status;
                cert.stats.elapsed_seconds = clock.elapsed();
                return cert;
            }

            if (set.count() == n)
                cert.proper_everywhere = false;
            if (set.count() + 1 == n)
                for (Vertex a = 0; a < n; ++a)
                    if (! set.test(a) && ! cert.co_singletons[a])
                        cert.co_singletons[a] = cert.rows.size();
            cert.rows.push_back({std::move(pinning), std::move(set)});
        }

        cert.co_singletons_found = std::all_of(cert.co_singletons.begin(), cert.co_singletons.end(), [](auto & c) { return c.has_value(); });
        cert.valid = cert.co_singletons_found && cert.proper_everywhere;
        cert.stats.elapsed_seconds = clock.elapsed();
        return cert;
    }

    auto parse_gadget_family(std::string_view name) -> GadgetFamily
    {
        if (name == "directed-cycle")
            return GadgetFamily::directed_cycle;
        if (name == "symmetric-even-cycle")
            return GadgetFamily::symmetric_even_cycle;
        if (name == "crown")
            return GadgetFamily::crown;
        if (name == "adhoc4")
            return GadgetFamily::adhoc4;
        if (name == "Gn" || name == "complete-minus-matching")
            return GadgetFamily::complete_minus_matching;
        if (name == "Hn" || name == "complete-minus-hamiltonian")
            return GadgetFamily::complete_minus_hamiltonian;
        throw Error{"unknown gadget family '" + std::string{name} + "'"};
    }

    auto to_string(GadgetFamily f) -> std::string
    {
        switch (f) {
        case GadgetFamily::directed_cycle: return "directed-cycle";
        case GadgetFamily::symmetric_even_cycle: return "symmetric-even-cycle";
        case GadgetFamily::crown: return "crown";
        case GadgetFamily::adhoc4: return "adhoc4";
        case GadgetFamily::complete_minus_matching: return "Gn";
        case GadgetFamily::complete_minus_hamiltonian: return "Hn";
        }
        return "?";
    }

    auto family_digraph(GadgetFamily family, size_t param) -> Digraph
    {
        switch (family) {
        case GadgetFamily::directed_cycle: return directed_cycle(param);
        case GadgetFamily::symmetric_even_cycle:
            if (param % 2 != 0 || param < 4)
                throw Error{"symmetric even cycle needs an even vertex count ≥ 4"};
            return symmetric_cycle(param);
        case GadgetFamily::crown: return crown(param);
        case GadgetFamily::adhoc4: return adhoc_4cycle();
        case GadgetFamily::complete_minus_matching: return complete_minus_matching(param);
        case GadgetFamily::complete_minus_hamiltonian: return complete_minus_hamiltonian(param);
        }
        throw Error{"unknown gadget family"};
    }

    namespace
    {
        auto alternating(size_t length, bool forward_first) -> std::string
        {
            std::string w;
            for (size_t i = 0; i < length; ++i)
                w += ((i % 2 == 0) == forward_first) ? '+' : '-';
            return w;
        }

        // two paths from x = 0 to u = 1 with the given words, sharing only their ends
        auto theta_graph(const std::string & p, const std::string & q) -> GadgetSpec
        {
            const size_t inner_p = p.size() - 1, inner_q = q.size() - 1;
            const size_t n = 2 + inner_p + inner_q;
            auto chain = [&](const std::string & w, Vertex first_inner) {
                vector<Vertex> vs{0};
                for (size_t i = 0; i + 1 < w.size(); ++i)
                    vs.push_back(first_inner + Vertex(i));
                vs.push_back(1);
                return vs;
            };
            vector<Arc> arcs;
            auto add = [&](const std::string & w, const vector<Vertex> & vs) {
                for (size_t i = 0; i < w.size(); ++i) {
                    if (w[i] != '-')
                        arcs.emplace_back(vs[i], vs[i + 1]);
                    if (w[i] != '+')
                        arcs.emplace_back(vs[i + 1], vs[i]);
                }
            };
            add(p, chain(p, 2));
            add(q, chain(q, Vertex(2 + inner_p)));
            return GadgetSpec{Digraph{n, arcs}, {0}, 1, ""};
        }
    }

    auto builtin_gadget(GadgetFamily family, size_t param, const Budget & budget) -> GadgetSpec
    {
        switch (family) {
        case GadgetFamily::directed_cycle:
            if (param < 3)
                throw Error{"directed cycle needs m ≥ 3"};
            return GadgetSpec{path(std::string(param - 2, '+')), {0}, Vertex(param - 2), "directed path of length m-2"};

        case GadgetFamily::symmetric_even_cycle: {
            if (param % 2 != 0 || param < 4)
                throw Error{"symmetric even cycle needs an even vertex count ≥ 4"};
            size_t m = param / 2;
            return GadgetSpec{path(std::string(m - 1, 's')), {0}, Vertex(m - 1), "symmetric path of length m-1"};
        }

        case GadgetFamily::crown: {
            auto target = crown(param);
            size_t m = param / 2;
            const std::pair<bool, bool> variants[] = {{true, false}, {false, true}, {true, true}, {false, false}};
            for (auto [p_forward, q_forward] : variants) {
                auto p = alternating(m, p_forward), q = alternating(m, q_forward);
                auto gadget = theta_graph(p, q);
                gadget.label = "paths " + p + " and " + q;
                if (verify_uniform_gadget(target, gadget, budget).valid == true)
                    return gadget;
            }
            throw Error{"no crown gadget orientation validates"};
        }

        case GadgetFamily::adhoc4:
            return GadgetSpec{directed_cycle(4), {0}, 2, "directed 4-cycle, output opposite the pin"};

        case GadgetFamily::complete_minus_matching:
            family_digraph(family, param);
            return GadgetSpec{path("s"), {0}, 1, "symmetric edge"};

        case GadgetFamily::complete_minus_hamiltonian:
            family_digraph(family, param);
            return GadgetSpec{path("+"), {0}, 1, "directed edge"};
        }
        throw Error{"unknown gadget family"};
    }

    auto glued_gadget(const GadgetSpec & gadget, size_t copies) -> GluedGadget
    {
        gadget.validate();
        if (copies < 2)
            throw Error{"gluing needs at least two copies"};

        const size_t kn = gadget.k.size(), t = gadget.pins.size();
        vector<Vertex> others;
        for (Vertex v = 0; v < kn; ++v)
            if (std::find(gadget.pins.begin(), gadget.pins.end(), v) == gadget.pins.end())
                others.push_back(v);

        const size_t n = t + copies * others.size();
        auto place = [&](size_t copy, Vertex v) -> Vertex {
            auto pin = std::find(gadget.pins.begin(), gadget.pins.end(), v);
            if (pin != gadget.pins.end())
                return Vertex(pin - gadget.pins.begin());
            auto pos = std::lower_bound(others.begin(), others.end(), v) - others.begin();
            return Vertex(t + copy * others.size() + pos);
        };

        GluedGadget result;
        vector<Arc> arcs;
        for (size_t c = 0; c < copies; ++c) {
            for (auto [a, b] : gadget.k.arcs())
                if (a != b)
                    arcs.emplace_back(place(c, a), place(c, b));
            result.outputs.push_back(place(c, gadget.u));
        }
        for (size_t i = 0; i < t; ++i)
            result.pins.push_back(Vertex(i));
        result.l = Digraph{n, arcs};
        return result;
    }

    auto direct_theta_check(const Digraph & g, const GadgetSpec & gadget, const Budget & budget) -> bool
    {
        const size_t n = g.size();
        if (n > 4)
            throw Error{"direct θ check is limited to digraphs with at most 4 vertices"};
        if (n < 2)
            throw Error{"θ needs at least 2 vertices"};

        auto glued = glued_gadget(gadget, n);
        std::set<vector<Vertex>> tuples;
        vector<Vertex> t(n);
        auto stats = enumerate_homs(glued.l, g, {}, [&](span<const Vertex> h) {
            for (size_t i = 0; i < n; ++i)
                t[i] = h[glued.outputs[i]];
            tuples.insert(t);
            return true;
        }, budget);
        if (! stats.complete())
            throw SearchIncomplete{stats};

        auto theta = slupecki_relation(n);
        return vector<vector<Vertex>>(tuples.begin(), tuples.end()) == theta.tuples;
    }
}
