#include <rdlab/families.hh>
#include <rdlab/gadgets.hh>
#include <rdlab/hom.hh>
#include <rdlab/io.hh>
#include <rdlab/ordinal.hh>
#include <rdlab/poly.hh>
#include <rdlab/topology.hh>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace rdlab;

namespace
{
    auto budget_of(std::optional<std::uint64_t> nodes, std::optional<double> timeout) -> Budget
    {
        Budget b;
        if (nodes)
            b.max_nodes = *nodes;
        if (timeout)
            b.timeout = std::chrono::duration<double>{*timeout};
        return b;
    }

    auto classification_dict(const Classification & c) -> py::dict
    {
        py::dict d;
        d["kind"] = to_string(c.kind);
        d["describe"] = c.describe();
        d["surjective"] = c.surjective;
        d["idempotent"] = c.idempotent;
        d["essential"] = c.essential;
        return d;
    }

    auto verdict_dict(const Verdict & v) -> py::dict
    {
        py::dict d;
        d["property"] = v.property;
        d["arity"] = v.arity;
        d["holds"] = v.holds ? py::cast(*v.holds) : py::none();
        d["witness"] = v.witness ? py::cast(*v.witness) : py::none();
        d["canonical"] = v.canonical;
        d["nodes"] = v.stats.nodes;
        d["status"] = to_string(v.stats.status);
        return d;
    }

    auto set_list(const VertexSet & s) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
            out.push_back(Vertex(i));
        return out;
    }

    template <typename F>
    auto decider(F f)
    {
        return [f](const Digraph & g, std::size_t k, std::optional<std::uint64_t> nodes, std::optional<double> timeout,
                   std::size_t threads) {
            DeciderOptions opts;
            opts.budget = budget_of(nodes, timeout);
            opts.threads = threads;
            opts.canonical = threads <= 1;
            Verdict v;
            {
                py::gil_scoped_release release;
                v = f(g, k, opts);
            }
            return verdict_dict(v);
        };
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Homomorphisms, polymorphisms and gadgets for finite reflexive digraphs";

    py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<SearchIncomplete>(m, "SearchIncomplete", PyExc_RuntimeError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init([](std::size_t n, const std::vector<Arc> & arcs) { return Digraph{n, arcs}; }), py::arg("n"),
            py::arg("arcs") = std::vector<Arc>{})
        .def("__len__", &Digraph::size)
        .def("has_arc", &Digraph::has_arc)
        .def("arcs", &Digraph::arcs)
        .def_property_readonly("arc_count", &Digraph::arc_count)
        .def("is_symmetric", &Digraph::is_symmetric)
        .def("__eq__", [](const Digraph & a, const Digraph & b) { return a == b; })
        .def("__str__", [](const Digraph & g) {
            std::ostringstream os;
            format_digraph(os, g);
            return os.str();
        })
        .def_static("parse", [](const std::string & text) {
            std::istringstream in{text};
            return parse_digraph(in);
        })
        .def("digest", [](const Digraph & g) { return digest(g); });

    py::class_<OperationTable>(m, "OperationTable")
        .def(py::init<std::size_t, std::size_t, std::vector<Vertex>>(), py::arg("base"), py::arg("arity"), py::arg("values"))
        .def_property_readonly("base", &OperationTable::base)
        .def_property_readonly("arity", &OperationTable::arity)
        .def_property_readonly("values", [](const OperationTable & f) { return std::vector<Vertex>(f.values().begin(), f.values().end()); })
        .def("__call__", [](const OperationTable & f, const std::vector<Vertex> & args) { return f.at(args); })
        .def("__eq__", [](const OperationTable & a, const OperationTable & b) { return a == b; })
        .def_static("projection", &OperationTable::projection)
        .def_static("identity", &OperationTable::identity);

    m.def("path", &path);
    m.def("cycle", &cycle);
    m.def("directed_cycle", &directed_cycle);
    m.def("symmetric_cycle", &symmetric_cycle);
    m.def("crown", &crown);
    m.def("complete_minus_matching", &complete_minus_matching);
    m.def("complete_minus_hamiltonian", &complete_minus_hamiltonian);
    m.def("antichain", &antichain);
    m.def("chain", &chain);
    m.def("ordinal_sum", [](const std::vector<std::size_t> & levels) { return ordinal_sum(levels); });
    m.def("suspension", &suspension);
    m.def("poset_suspension", &poset_suspension);
    m.def("lemma_example_digraph", &lemma_example_digraph);
    m.def("adhoc_4cycle", &adhoc_4cycle);
    m.def("is_poset", &is_poset);
    m.def("product", &product);
    m.def("power", &power);
    m.def("symmetrization", &symmetrization);

    m.def("count_homs", [](const Digraph & h, const Digraph & g, const Pinning & pins) {
        py::gil_scoped_release release;
        return count_homs(h, g, pins);
    }, py::arg("source"), py::arg("target"), py::arg("pins") = Pinning{});
    m.def("endomorphisms", [](const Digraph & g) { return endomorphisms(g); });
    m.def("identity_status", [](const Digraph & g) {
        auto s = identity_status(g);
        py::dict d;
        d["isolated_loop"] = s.isolated_loop;
        d["alone_weak"] = s.alone_weak;
        d["alone_strong"] = s.alone_strong;
        std::vector<std::vector<Vertex>> comp;
        for (auto i : s.weak_component)
            comp.push_back(s.homs.maps[i]);
        d["weak_component"] = comp;
        return d;
    });

    m.def("is_polymorphism", &is_polymorphism);
    m.def("classify", [](const OperationTable & f) { return classification_dict(classify(f)); });
    m.def("preserves_theta", [](const OperationTable & f) -> py::object {
        auto p = preserves_relation(f, slupecki_relation(f.base()));
        return p.holds ? py::cast(*p.holds) : py::none();
    });
    m.def("k_slupecki", decider(&k_slupecki), py::arg("g"), py::arg("k"), py::arg("max_nodes") = py::none(),
        py::arg("timeout") = py::none(), py::arg("threads") = 1);
    m.def("k_idempotent_trivial", decider(&k_idempotent_trivial), py::arg("g"), py::arg("k"), py::arg("max_nodes") = py::none(),
        py::arg("timeout") = py::none(), py::arg("threads") = 1);

    m.def("verify_builtin_gadget", [](const std::string & family, std::size_t param) {
        auto fam = parse_gadget_family(family);
        auto g = family_digraph(fam, param);
        auto gadget = builtin_gadget(fam, param);
        auto cert = verify_uniform_gadget(g, gadget);
        py::dict d;
        d["label"] = gadget.label;
        d["valid"] = cert.valid ? py::cast(*cert.valid) : py::none();
        py::list rows;
        for (auto & r : cert.rows)
            rows.append(py::make_tuple(r.pinning, set_list(r.set)));
        d["rows"] = rows;
        return d;
    });

    m.def("mu", [](std::size_t mm, std::size_t k) -> py::object {
        auto r = mu(mm, k);
        return r.value ? py::cast(*r.value) : py::none();
    });
    m.def("bmk", [](std::size_t mm, std::size_t k) { return bmk(mm, k).value; });
    m.def("ternary_witness", &ternary_witness);
    m.def("binary_witness", &binary_witness);

    m.def("simplex_counts", [](const Digraph & g) {
        auto k = simplices(g);
        std::vector<std::size_t> counts;
        for (std::size_t d = 0; d <= k.max_dimension(); ++d)
            counts.push_back(k.count(d));
        return counts;
    });
    m.def("euler_characteristic", [](const Digraph & g) { return euler_characteristic(g); });
    m.def("triangulates_1_sphere", &triangulates_1_sphere);
}
