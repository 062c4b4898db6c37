// rdlab: command-line front end for the reflexive-digraph library.
// Exit codes: 0 result computed, 2 search budget exhausted, 1 usage or I/O error.

#include <rdlab/families.hh>
#include <rdlab/gadgets.hh>
#include <rdlab/hom.hh>
#include <rdlab/io.hh>
#include <rdlab/ordinal.hh>
#include <rdlab/poly.hh>
#include <rdlab/topology.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef RDLAB_VERSION
#define RDLAB_VERSION "0.0.0"
#endif

using namespace rdlab;
using json = nlohmann::ordered_json;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_error = 1;
    constexpr int exit_inconclusive = 2;

    struct Common
    {
        bool json_out = false;
        std::size_t threads = 1;
        std::uint64_t budget_nodes = 100'000'000;
        double timeout = 300.0;
        std::optional<std::uint64_t> seed;
        std::string command;
    };

    struct Report
    {
        json inputs = json::object();
        json result = json::object();
        json stats = json::object();
    };

    auto budget_of(const Common & c) -> Budget
    {
        Budget b;
        b.max_nodes = c.budget_nodes;
        b.timeout = std::chrono::duration<double>{c.timeout};
        return b;
    }

    auto stats_json(const SearchStats & s) -> json
    {
        return {{"nodes", s.nodes}, {"prunes", s.prunes}, {"elapsed_seconds", s.elapsed_seconds}, {"status", to_string(s.status)}};
    }

    auto table_json(const OperationTable & f) -> json
    {
        return {{"base", f.base()}, {"arity", f.arity()}, {"values", std::vector<Vertex>(f.values().begin(), f.values().end())}};
    }

    auto classification_json(const Classification & c) -> json
    {
        json j = {{"kind", to_string(c.kind)}, {"describe", c.describe()}, {"surjective", c.surjective}, {"idempotent", c.idempotent}};
        std::vector<std::size_t> one_based;
        for (auto i : c.essential)
            one_based.push_back(i + 1);
        j["essential"] = one_based;
        if (c.unary)
            j["unary"] = std::vector<Vertex>(c.unary->values().begin(), c.unary->values().end());
        return j;
    }

    auto set_json(const VertexSet & s) -> json
    {
        json a = json::array();
        for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i))
            a.push_back(i);
        return a;
    }

    auto load_digraph(const std::string & path, Report & r, const std::string & key) -> Digraph
    {
        Digraph g;
        if (path == "-")
            g = parse_digraph(std::cin, "<stdin>");
        else
            g = read_digraph(path);
        r.inputs[key] = {{"path", path}, {"vertices", g.size()}, {"digest", digest(g)}};
        return g;
    }

    auto load_op(const std::string & path, Report & r) -> OperationTable
    {
        auto f = read_op(path);
        r.inputs["op"] = {{"path", path}, {"base", f.base()}, {"arity", f.arity()}, {"digest", digest(f)}};
        return f;
    }

    void render_human(const json & j, const std::string & indent = "")
    {
        for (auto & [key, value] : j.items()) {
            if (value.is_object()) {
                std::cout << indent << key << ":\n";
                render_human(value, indent + "  ");
            }
            else if (value.is_array() && ! value.empty() && value.front().is_object()) {
                std::cout << indent << key << ":\n";
                for (auto & item : value)
                    std::cout << indent << "  " << item.dump() << '\n';
            }
            else if (value.is_string())
                std::cout << indent << key << ": " << value.get<std::string>() << '\n';
            else
                std::cout << indent << key << ": " << value.dump() << '\n';
        }
    }

    void emit(const Common & c, const Report & r)
    {
        if (c.json_out) {
            json j;
            j["command"] = c.command;
            j["inputs"] = r.inputs;
            j["result"] = r.result;
            j["stats"] = r.stats;
            j["version"] = RDLAB_VERSION;
            j["deterministic"] = c.threads <= 1;
            if (c.seed)
                j["seed"] = *c.seed;
            std::cout << j.dump(2) << '\n';
        }
        else
            render_human(r.result);
    }

    auto parse_list(const std::string & text) -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        std::string item;
        std::istringstream in{text};
        while (std::getline(in, item, ','))
            if (! item.empty())
                out.push_back(Vertex(std::stoul(item)));
        return out;
    }

    auto parse_pin(const std::string & text) -> std::pair<Vertex, Vertex>
    {
        auto eq = text.find('=');
        if (eq == std::string::npos)
            throw Error{"pin '" + text + "' is not of the form v=w"};
        return {Vertex(std::stoul(text.substr(0, eq))), Vertex(std::stoul(text.substr(eq + 1)))};
    }

    auto parse_size(const std::string & text, const std::string & what) -> std::size_t
    {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(text, &pos);
        }
        catch (const std::exception &) {
            pos = 0;
        }
        if (pos != text.size() || text.empty())
            throw Error{what + ": expected a non-negative integer, got '" + text + "'"};
        return v;
    }

    auto build_family(const std::string & name, const std::vector<std::string> & params, const std::string & input) -> Digraph
    {
        auto need = [&](std::size_t count) {
            if (params.size() != count)
                throw Error{"family " + name + " takes " + std::to_string(count) + " parameter(s)"};
        };
        auto num = [&](std::size_t i) { return parse_size(params.at(i), name); };
        if (name == "path" || name == "cycle") {
            need(1);
            return name == "path" ? path(params[0]) : cycle(params[0]);
        }
        if (name == "directed-cycle")
            return need(1), directed_cycle(num(0));
        if (name == "symmetric-cycle")
            return need(1), symmetric_cycle(num(0));
        if (name == "crown")
            return need(1), crown(num(0));
        if (name == "Gn" || name == "complete-minus-matching")
            return need(1), complete_minus_matching(num(0));
        if (name == "Hn" || name == "complete-minus-hamiltonian")
            return need(1), complete_minus_hamiltonian(num(0));
        if (name == "antichain")
            return need(1), antichain(num(0));
        if (name == "chain")
            return need(1), chain(num(0));
        if (name == "ordinal-sum") {
            if (params.empty())
                throw Error{"family ordinal-sum needs at least one level size"};
            std::vector<std::size_t> levels;
            for (std::size_t i = 0; i < params.size(); ++i)
                levels.push_back(num(i));
            return ordinal_sum(levels);
        }
        if (name == "lemma-example")
            return need(0), lemma_example_digraph();
        if (name == "adhoc4")
            return need(0), adhoc_4cycle();
        if (name == "suspension" || name == "poset-suspension") {
            need(0);
            if (input.empty())
                throw Error{"family " + name + " needs -i"};
            auto g = input == "-" ? parse_digraph(std::cin, "<stdin>") : read_digraph(input);
            return name == "suspension" ? suspension(g) : poset_suspension(g);
        }
        throw Error{"unknown family '" + name + "'"};
    }

    void write_or_print(const std::string & out, const std::function<void(std::ostream &)> & fn)
    {
        if (out.empty() || out == "-") {
            fn(std::cout);
            return;
        }
        std::ofstream f{out};
        if (! f)
            throw Error{"cannot open " + out + " for writing"};
        fn(f);
        if (! f)
            throw Error{"error writing " + out};
    }

    auto verdict_json(const Verdict & v) -> json
    {
        json j = {{"property", v.property}, {"arity", v.arity}};
        j["holds"] = v.holds ? json(*v.holds) : json(nullptr);
        if (v.witness) {
            j["witness"] = table_json(*v.witness);
            if (v.witness_class)
                j["witness"]["classification"] = classification_json(*v.witness_class);
        }
        j["canonical"] = v.canonical;
        return j;
    }

    auto certificate_json(const UniformGadgetCertificate & cert) -> json
    {
        json rows = json::array();
        for (auto & row : cert.rows)
            rows.push_back({{"pinning", row.pinning}, {"set", set_json(row.set)}});
        json co = json::array();
        for (auto & c : cert.co_singletons)
            co.push_back(c ? json(*c) : json(nullptr));
        json j = {{"rows", rows}, {"co_singletons", co}, {"co_singletons_found", cert.co_singletons_found},
            {"proper_everywhere", cert.proper_everywhere}};
        j["valid"] = cert.valid ? json(*cert.valid) : json(nullptr);
        j["pinnings_total"] = cert.pinnings_total;
        return j;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Polymorphism and homomorphism tools for finite reflexive digraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", RDLAB_VERSION);

    Common common;
    if (auto * t = std::getenv("RDLAB_THREADS"))
        common.threads = std::max<std::size_t>(1, std::strtoul(t, nullptr, 10));
    for (int i = 0; i < argc; ++i)
        common.command += (i ? " " : "") + std::string(argv[i]);

    auto add_common = [&](CLI::App * sub, bool search) {
        sub->add_flag("--json", common.json_out, "Print the full JSON report");
        if (search) {
            sub->add_option("--threads", common.threads, "Worker threads (default RDLAB_THREADS or 1)")->check(CLI::PositiveNumber);
            sub->add_option("--budget-nodes", common.budget_nodes, "Search node budget");
            sub->add_option("--timeout", common.timeout, "Wall-clock limit in seconds");
        }
        sub->add_option("--seed", common.seed, "Seed recorded in the report");
    };

    // family
    auto * fam = app.add_subcommand("family", "Write a named digraph in .dg format");
    std::string fam_name, fam_out, fam_in;
    std::vector<std::string> fam_params;
    fam->add_option("name", fam_name,
           "directed-cycle, symmetric-cycle, crown, Gn, Hn, antichain, chain, ordinal-sum, path, cycle, "
           "lemma-example, adhoc4, suspension, poset-suspension")
        ->required();
    fam->add_option("params", fam_params, "Family parameters");
    fam->add_option("-o,--output", fam_out, "Output file (default stdout)");
    fam->add_option("-i,--input", fam_in, "Input digraph for suspensions");

    // check
    auto * chk = app.add_subcommand("check", "Decide k-Slupecki or k-idempotent-triviality by exhaustive search");
    std::string chk_prop, chk_in;
    std::size_t chk_k = 2;
    chk->add_option("property", chk_prop, "slupecki or idtrivial")->required()->check(CLI::IsMember({"slupecki", "idtrivial"}));
    chk->add_option("-k", chk_k, "Arity")->check(CLI::Range(1, 8));
    chk->add_option("-i,--input", chk_in, "Digraph (.dg)")->required();
    add_common(chk, true);

    // hom
    auto * hom = app.add_subcommand("hom", "Count, list or build homomorphisms");
    std::string hom_mode, hom_in, hom_target, hom_out;
    std::vector<std::string> hom_pins;
    hom->add_option("mode", hom_mode, "count, list or graph")->required()->check(CLI::IsMember({"count", "list", "graph"}));
    hom->add_option("-i,--input", hom_in, "Source digraph")->required();
    hom->add_option("--target", hom_target, "Target digraph (default the source)");
    hom->add_option("--pin", hom_pins, "Pin v=w (repeatable)");
    hom->add_option("-o,--output", hom_out, "For graph: .dg output; the table goes to <output>.maps");
    add_common(hom, true);

    // gadget
    auto * gad = app.add_subcommand("gadget", "Verify uniform gadget certificates");
    gad->require_subcommand(1);
    auto * gverify = gad->add_subcommand("verify", "Verify a supplied gadget");
    std::string gv_in, gv_gadget, gv_pins;
    Vertex gv_u = 0;
    bool g_direct = false;
    gverify->add_option("-i,--input", gv_in, "Target digraph")->required();
    gverify->add_option("--gadget", gv_gadget, "Gadget digraph K")->required();
    gverify->add_option("--pins", gv_pins, "Comma-separated pin vertices of K")->required();
    gverify->add_option("--u", gv_u, "Output vertex of K")->required();
    gverify->add_flag("--direct", g_direct, "Also run the glued-gadget check (at most 4 vertices)");
    add_common(gverify, true);
    auto * gbuiltin = gad->add_subcommand("builtin", "Verify a built-in gadget");
    std::string gb_family, gb_in;
    std::size_t gb_param = 0;
    gbuiltin->add_option("family", gb_family, "directed-cycle, symmetric-even-cycle, crown, adhoc4, Gn, Hn")->required();
    gbuiltin->add_option("param", gb_param, "Vertex count of the target family");
    gbuiltin->add_option("-i,--input", gb_in, "Target digraph (default the family member)");
    gbuiltin->add_flag("--direct", g_direct, "Also run the glued-gadget check (at most 4 vertices)");
    add_common(gbuiltin, true);

    // bmk
    auto * bm = app.add_subcommand("bmk", "Evaluate B(m,k)");
    std::size_t bm_m = 0, bm_k = 0;
    bool bm_argmax = false, bm_csv = false;
    std::vector<std::size_t> bm_table;
    bm->add_option("m", bm_m)->check(CLI::Range(2, 1000));
    bm->add_option("k", bm_k)->check(CLI::Range(2, 1000));
    bm->add_flag("--argmax", bm_argmax, "List the maximising quadruples");
    bm->add_option("--table", bm_table, "mMax kMax: tabulate B for 2..mMax by 2..kMax")->expected(2);
    bm->add_flag("--csv", bm_csv, "CSV table output");
    add_common(bm, false);

    // witness
    auto * wit = app.add_subcommand("witness", "Build the ternary or binary witness on m+n+k");
    std::string w_kind, w_out;
    std::size_t w_m = 2, w_n = 2, w_k = 2;
    bool w_verify = false;
    wit->add_option("kind", w_kind, "ternary or binary")->required()->check(CLI::IsMember({"ternary", "binary"}));
    wit->add_option("m", w_m)->required()->check(CLI::Range(2, 64));
    wit->add_option("n", w_n)->required()->check(CLI::Range(2, 64));
    wit->add_option("k", w_k)->required()->check(CLI::Range(2, 64));
    wit->add_option("-o,--output", w_out, "Write the table as .op");
    wit->add_flag("--verify", w_verify, "Report the classification and, for binary witnesses, the claims");
    add_common(wit, false);

    // topo
    auto * topo = app.add_subcommand("topo", "Simplex counts, Euler characteristic and 1-sphere test");
    std::string t_in;
    std::optional<std::size_t> t_maxdim;
    topo->add_option("-i,--input", t_in, "Digraph")->required();
    topo->add_option("--max-dim", t_maxdim, "Largest simplex dimension to enumerate");
    add_common(topo, false);

    // verify
    auto * ver = app.add_subcommand("verify", "Check an operation table");
    ver->require_subcommand(1);
    auto * vop = ver->add_subcommand("op", "Polymorphism check and classification");
    std::string v_in, v_op;
    bool v_theta = false;
    vop->add_option("-i,--input", v_in, "Digraph")->required();
    vop->add_option("--op", v_op, "Operation table (.op)")->required();
    vop->add_flag("--theta", v_theta, "Also test preservation of the relation of non-injective tuples");
    add_common(vop, true);
    auto * vclaims = ver->add_subcommand("claims", "Structural claims for a binary polymorphism of m+n+k");
    std::size_t vc_m = 2, vc_n = 2, vc_k = 2;
    vclaims->add_option("m", vc_m)->required()->check(CLI::Range(2, 64));
    vclaims->add_option("n", vc_n)->required()->check(CLI::Range(2, 64));
    vclaims->add_option("k", vc_k)->required()->check(CLI::Range(2, 64));
    vclaims->add_option("--op", v_op, "Operation table (.op)")->required();
    add_common(vclaims, false);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        std::cerr << "rdlab: " << e.what() << "\n\n" << app.help();
        return exit_error;
    }

    Report report;
    int code = exit_ok;
    try {
        if (*fam) {
            auto g = build_family(fam_name, fam_params, fam_in);
            write_or_print(fam_out, [&](std::ostream & os) { format_digraph(os, g); });
            return exit_ok;
        }

        if (*chk) {
            auto g = load_digraph(chk_in, report, "digraph");
            DeciderOptions opts;
            opts.budget = budget_of(common);
            opts.threads = common.threads;
            opts.canonical = common.threads <= 1;
            auto v = chk_prop == "slupecki" ? k_slupecki(g, chk_k, opts) : k_idempotent_trivial(g, chk_k, opts);
            report.result = verdict_json(v);
            report.stats = stats_json(v.stats);
            if (! v.holds)
                code = exit_inconclusive;
        }

        if (*hom) {
            auto h = load_digraph(hom_in, report, "source");
            auto g = hom_target.empty() ? h : load_digraph(hom_target, report, "target");
            Pinning pins;
            for (auto & p : hom_pins)
                pins.push_back(parse_pin(p));
            auto budget = budget_of(common);
            if (hom_mode == "count" || hom_mode == "list") {
                std::uint64_t count = 0;
                json maps = json::array();
                auto stats = enumerate_homs(h, g, pins, [&](std::span<const Vertex> m) {
                    ++count;
                    if (hom_mode == "list")
                        maps.push_back(std::vector<Vertex>(m.begin(), m.end()));
                    return true;
                }, budget);
                report.stats = stats_json(stats);
                report.result["complete"] = stats.complete();
                report.result["count"] = count;
                if (hom_mode == "list")
                    report.result["maps"] = maps;
                if (! stats.complete())
                    code = exit_inconclusive;
            }
            else {
                if (! pins.empty())
                    throw Error{"hom graph does not take pins"};
                auto hd = hom_digraph(h, g, budget);
                report.result["vertices"] = hd.maps.size();
                report.result["arcs"] = hd.graph.arc_count();
                report.result["digest"] = digest(hd.graph);
                if (! hom_out.empty()) {
                    write_digraph(hd.graph, hom_out);
                    write_or_print(hom_out + ".maps", [&](std::ostream & os) {
                        for (std::size_t i = 0; i < hd.maps.size(); ++i) {
                            os << i << ':';
                            for (auto v : hd.maps[i])
                                os << ' ' << v;
                            os << '\n';
                        }
                    });
                    report.result["output"] = hom_out;
                    report.result["maps_output"] = hom_out + ".maps";
                }
                else
                    report.result["maps"] = hd.maps;
            }
        }

        if (*gverify || *gbuiltin) {
            Digraph g;
            GadgetSpec gadget;
            auto budget = budget_of(common);
            if (*gverify) {
                g = load_digraph(gv_in, report, "digraph");
                gadget.k = load_digraph(gv_gadget, report, "gadget");
                gadget.pins = parse_list(gv_pins);
                gadget.u = gv_u;
            }
            else {
                auto family = parse_gadget_family(gb_family);
                g = gb_in.empty() ? family_digraph(family, gb_param) : load_digraph(gb_in, report, "digraph");
                gadget = builtin_gadget(family, gb_param, budget);
                report.inputs["gadget"] = {{"family", to_string(family)}, {"param", gb_param}, {"digest", digest(gadget.k)}};
                report.result["label"] = gadget.label;
                report.result["gadget"] = {{"vertices", gadget.k.size()}, {"pins", gadget.pins}, {"u", gadget.u}};
            }
            auto cert = verify_uniform_gadget(g, gadget, budget);
            report.result["digraph"] = digest(g);
            report.result.update(certificate_json(cert));
            report.stats = stats_json(cert.stats);
            if (g_direct)
                report.result["direct_theta"] = direct_theta_check(g, gadget, budget);
            if (! cert.valid)
                code = exit_inconclusive;
        }

        if (*bm) {
            if (bm_table.size() == 2) {
                json rows = json::array();
                for (std::size_t m = 2; m <= bm_table[0]; ++m) {
                    json row = json::array();
                    for (std::size_t k = 2; k <= bm_table[1]; ++k)
                        row.push_back(bmk(m, k).value);
                    rows.push_back(row);
                }
                if (common.json_out) {
                    report.result["table"] = rows;
                    emit(common, report);
                }
                else {
                    const char * sep = bm_csv ? "," : " ";
                    std::cout << "m";
                    for (std::size_t k = 2; k <= bm_table[1]; ++k)
                        std::cout << sep << k;
                    std::cout << '\n';
                    for (std::size_t m = 2; m <= bm_table[0]; ++m) {
                        std::cout << m;
                        for (auto & v : rows[m - 2])
                            std::cout << sep << v.get<std::size_t>();
                        std::cout << '\n';
                    }
                }
                return exit_ok;
            }
            if (bm_m == 0 || bm_k == 0)
                throw Error{"bmk needs m and k, or --table mMax kMax"};
            auto b = bmk(bm_m, bm_k);
            report.result = {{"m", b.m}, {"k", b.k}, {"mu", b.mu ? json(*b.mu) : json(nullptr)}, {"value", b.value}, {"uses_mk", b.uses_mk()}};
            if (bm_argmax)
                report.result["argmax"] = b.argmax;
            if (common.json_out)
                emit(common, report);
            else {
                std::cout << b.value << '\n';
                if (bm_argmax)
                    for (auto & q : b.argmax)
                        std::cout << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
            }
            return exit_ok;
        }

        if (*wit) {
            auto f = w_kind == "ternary" ? ternary_witness(w_m, w_n, w_k) : binary_witness(w_m, w_n, w_k);
            report.result = {{"kind", w_kind}, {"m", w_m}, {"n", w_n}, {"k", w_k}, {"digest", digest(f)}};
            if (! w_out.empty()) {
                write_op(f, w_out);
                report.result["output"] = w_out;
            }
            else if (common.json_out)
                report.result["table"] = table_json(f);
            if (w_verify) {
                OrdinalSumPoset p{w_m, w_n, w_k};
                report.result["polymorphism"] = is_polymorphism(p.graph, f);
                report.result["classification"] = classification_json(classify(f));
                if (w_kind == "binary") {
                    json claims = json::array();
                    for (auto & c : verify_claims(p, f))
                        claims.push_back({{"claim", c.claim}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
                    report.result["claims"] = claims;
                }
            }
            if (w_out.empty() && ! common.json_out) {
                format_op(std::cout, f);
                if (! w_verify)
                    return exit_ok;
            }
        }

        if (*topo) {
            auto g = load_digraph(t_in, report, "digraph");
            auto k = simplices(g, t_maxdim);
            std::vector<std::size_t> counts;
            for (std::size_t d = 0; d <= k.max_dimension(); ++d)
                counts.push_back(k.count(d));
            report.result["simplices"] = counts;
            if (! t_maxdim || k.max_dimension() < *t_maxdim)
                report.result["euler_characteristic"] = k.euler_characteristic();
            else
                report.result["euler_characteristic"] = nullptr;
            report.result["triangulates_1_sphere"] = triangulates_1_sphere(g);
            report.result["intransitive"] = is_intransitive(g);
        }

        if (*vop) {
            auto g = load_digraph(v_in, report, "digraph");
            auto f = load_op(v_op, report);
            report.result["polymorphism"] = is_polymorphism(g, f);
            report.result["classification"] = classification_json(classify(f));
            if (v_theta) {
                auto p = preserves_relation(f, slupecki_relation(f.base()), budget_of(common));
                report.result["preserves_theta"] = p.holds ? json(*p.holds) : json(nullptr);
                report.result["theta_mode"] = to_string(p.mode);
                if (! p.counterexample.empty())
                    report.result["theta_counterexample"] = p.counterexample;
                report.stats = stats_json(p.stats);
                if (! p.holds)
                    code = exit_inconclusive;
            }
        }

        if (*vclaims) {
            auto f = load_op(v_op, report);
            OrdinalSumPoset p{vc_m, vc_n, vc_k};
            json claims = json::array();
            for (auto & c : verify_claims(p, f))
                claims.push_back({{"claim", c.claim}, {"outcome", to_string(c.outcome)}, {"detail", c.detail}});
            report.result["claims"] = claims;
        }
    }
    catch (const SearchIncomplete & e) {
        report.result["complete"] = false;
        report.stats = stats_json(e.stats);
        emit(common, report);
        std::cerr << "rdlab: " << e.what() << '\n';
        return exit_inconclusive;
    }
    catch (const std::exception & e) {
        std::cerr << "rdlab: " << e.what() << '\n';
        return exit_error;
    }

    emit(common, report);
    return code;
}
