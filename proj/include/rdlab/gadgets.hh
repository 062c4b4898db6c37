#pragma once

#include <rdlab/budget.hh>
#include <rdlab/digraph.hh>
#include <rdlab/hom.hh>

#include <optional>
#include <string>
#include <vector>

namespace rdlab
{
    /// A digraph K with ordered pin vertices and an output vertex u.
    struct GadgetSpec
    {
        Digraph k;
        std::vector<Vertex> pins;
        Vertex u = 0;
        /// Free-form note set by builtin_gadget, e.g. which crown orientation was chosen.
        std::string label;

        /// Throws Error on repeated or out-of-range pins or output.
        void validate() const;
        [[nodiscard]] auto output_is_pin() const -> bool;
    };

    /// {g(u) : g: K → G a homomorphism agreeing with the pin values}.
    /// Throws SearchIncomplete on budget exhaustion.
    auto pp_defined_set(const Digraph & g, const GadgetSpec & gadget, std::span<const Vertex> pin_values,
        const Budget & budget = {}) -> VertexSet;

    struct GadgetRow
    {
        std::vector<Vertex> pinning;
        VertexSet set;
    };

    struct UniformGadgetCertificate
    {
        std::vector<GadgetRow> rows;
        /// co_singletons[a] = index of the first row defining G \ {a}, if any.
        std::vector<std::optional<std::size_t>> co_singletons;
        bool co_singletons_found = false;
        bool proper_everywhere = false;
        /// nullopt when the budget ran out; rows then lists only the completed pinnings.
        std::optional<bool> valid;
        std::size_t pinnings_total = 0;
        SearchStats stats;
    };

    auto verify_uniform_gadget(const Digraph & g, const GadgetSpec & gadget, const Budget & budget = {}) -> UniformGadgetCertificate;

    enum class GadgetFamily
    {
        directed_cycle,
        symmetric_even_cycle,
        crown,
        adhoc4,
        complete_minus_matching,
        complete_minus_hamiltonian
    };

    auto parse_gadget_family(std::string_view name) -> GadgetFamily;
    auto to_string(GadgetFamily f) -> std::string;

    /// The target digraph the built-in gadget is meant for.
    auto family_digraph(GadgetFamily family, std::size_t param) -> Digraph;

    /**
     * The gadget for the given family. param is the vertex count (m for
     * directed cycles, 2m for symmetric cycles and crowns, 2n for Gn, n for
     * Hn); adhoc4 ignores it. For crowns the four orientation variants are
     * tried in order and the first with a valid certificate is returned.
     */
    auto builtin_gadget(GadgetFamily family, std::size_t param, const Budget & budget = {}) -> GadgetSpec;

    struct GluedGadget
    {
        Digraph l;
        /// Shared pins occupy vertices 0..t-1.
        std::vector<Vertex> pins;
        std::vector<Vertex> outputs;
    };

    /// copies ≥ 2 copies of K amalgamated along the pins.
    auto glued_gadget(const GadgetSpec & gadget, std::size_t copies) -> GluedGadget;

    /// Does {(h(u_1),...,h(u_n)) : h: L → G} equal θ, with L the n-fold glued gadget?
    /// Requires |G| ≤ 4. Throws SearchIncomplete.
    auto direct_theta_check(const Digraph & g, const GadgetSpec & gadget, const Budget & budget = {}) -> bool;
}
