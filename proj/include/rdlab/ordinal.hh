#pragma once

#include <rdlab/digraph.hh>
#include <rdlab/operation.hh>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rdlab
{
    /// m ⊕ n ⊕ k with A = 0..m-1, B = m..m+n-1, C = m+n..m+n+k-1.
    struct OrdinalSumPoset
    {
        std::size_t m = 2, n = 2, k = 2;
        Digraph graph;

        /// Throws Error unless m, n, k ≥ 2.
        OrdinalSumPoset(std::size_t m, std::size_t n, std::size_t k);

        [[nodiscard]] auto a(std::size_t i) const -> Vertex { return Vertex(i); }
        [[nodiscard]] auto b(std::size_t i) const -> Vertex { return Vertex(m + i); }
        [[nodiscard]] auto c(std::size_t i) const -> Vertex { return Vertex(m + n + i); }
        [[nodiscard]] auto size() const -> std::size_t { return m + n + k; }
        [[nodiscard]] auto in_a(Vertex v) const -> bool { return v < m; }
        [[nodiscard]] auto in_b(Vertex v) const -> bool { return v >= m && v < m + n; }
        [[nodiscard]] auto in_c(Vertex v) const -> bool { return v >= m + n; }
        [[nodiscard]] auto level_a() const -> std::vector<Vertex>;
        [[nodiscard]] auto level_b() const -> std::vector<Vertex>;
        [[nodiscard]] auto level_c() const -> std::vector<Vertex>;
    };

    using Quadruple = std::array<std::size_t, 4>;

    struct MuResult
    {
        /// nullopt when no quadruple is feasible.
        std::optional<std::size_t> value;
        /// All maximising (α, β, γ, δ), lexicographically sorted.
        std::vector<Quadruple> argmax;
    };

    /// Max of αγ + βδ over 0<α,β<m, 0<γ,δ<k with (m−α)(m−β) ≥ m−1 and (k−γ)(k−δ) ≥ k−1.
    auto mu(std::size_t m, std::size_t k) -> MuResult;

    struct BmkResult
    {
        std::size_t m = 0, k = 0;
        std::optional<std::size_t> mu;
        std::size_t value = 0;
        /// Maximising quadruples when μ ≥ mk; empty when the value is mk alone.
        std::vector<Quadruple> argmax;
        [[nodiscard]] auto uses_mk() const -> bool { return ! mu || *mu < m * k; }
    };

    auto bmk(std::size_t m, std::size_t k) -> BmkResult;

    /// n > B(m,k) + 1.
    auto two_slupecki_predicate(std::size_t m, std::size_t n, std::size_t k) -> bool;

    /// The onto, not essentially unary ternary polymorphism of m ⊕ n ⊕ k; verified before return.
    auto ternary_witness(std::size_t m, std::size_t n, std::size_t k) -> OperationTable;

    /// An onto, essentially binary polymorphism of m ⊕ n ⊕ k with f(B²) = {b₀}.
    /// Refuses (Error) when n > B(m,k) + 1. Verified before return.
    auto binary_witness(std::size_t m, std::size_t n, std::size_t k) -> OperationTable;

    /// The level tables of binary_witness: f_A on A² and f_C on C² (as tables over
    /// the level indices 0..m-1 and 0..k-1).
    auto level_tables(std::size_t m, std::size_t k) -> std::pair<OperationTable, OperationTable>;

    struct LRProfile
    {
        /// Rows (l) and columns (r) on which f restricted to T² is constant, with the constants.
        std::vector<Vertex> l_a, r_a, l_c, r_c;
        std::vector<Vertex> l_a_value, r_a_value, l_c_value, r_c_value;
    };

    /// f must be binary on the poset's vertices, mapping A² into A and C² into C.
    auto lr_profile(const OrdinalSumPoset & p, const OperationTable & f) -> LRProfile;

    enum class ClaimOutcome
    {
        pass,
        fail,
        not_applicable
    };

    auto to_string(ClaimOutcome c) -> std::string;

    struct ClaimResult
    {
        int claim = 0;
        ClaimOutcome outcome = ClaimOutcome::not_applicable;
        std::string detail;
    };

    /**
     * Evaluates the seven structural claims about a binary onto polymorphism
     * of m ⊕ n ⊕ k. Claims 1, 2 and 3 are checked on every input. Claim 5
     * needs f(A²) = A and f(C²) = C; claims 4, 6 and 7 additionally need f
     * to depend on both arguments.
     * Throws Error if f is not an onto binary polymorphism.
     */
    auto verify_claims(const OrdinalSumPoset & p, const OperationTable & f) -> std::vector<ClaimResult>;
}
