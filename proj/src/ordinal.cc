#include <rdlab/families.hh>
#include <rdlab/ordinal.hh>
#include <rdlab/poly.hh>

#include <algorithm>
#include <set>
#include <stdexcept>

using std::size_t;
using std::vector;

namespace rdlab
{
    OrdinalSumPoset::OrdinalSumPoset(size_t m_, size_t n_, size_t k_) :
        m(m_), n(n_), k(k_)
    {
        if (m < 2 || n < 2 || k < 2)
            throw Error{"m, n and k must all be at least 2"};
        graph = ordinal_sum({m, n, k});
    }

    namespace
    {
        auto range(Vertex from, size_t count) -> vector<Vertex>
        {
            vector<Vertex> r(count);
            for (size_t i = 0; i < count; ++i)
                r[i] = Vertex(from + i);
            return r;
        }
    }

    auto OrdinalSumPoset::level_a() const -> vector<Vertex> { return range(0, m); }
    auto OrdinalSumPoset::level_b() const -> vector<Vertex> { return range(Vertex(m), n); }
    auto OrdinalSumPoset::level_c() const -> vector<Vertex> { return range(Vertex(m + n), k); }

    auto mu(size_t m, size_t k) -> MuResult
    {
        if (m < 2 || k < 2)
            throw Error{"m and k must be at least 2"};

        auto feasible = [](size_t s) {
            vector<std::pair<size_t, size_t>> pairs;
            for (size_t x = 1; x < s; ++x)
                for (size_t y = 1; y < s; ++y)
                    if ((s - x) * (s - y) >= s - 1)
                        pairs.emplace_back(x, y);
            return pairs;
        };

        MuResult r;
        auto pa = feasible(m), pc = feasible(k);
        for (auto [alpha, beta] : pa)
            for (auto [gamma, delta] : pc) {
                size_t v = alpha * gamma + beta * delta;
                if (! r.value || v > *r.value) {
                    r.value = v;
                    r.argmax.clear();
                }
                if (v == *r.value)
                    r.argmax.push_back({alpha, beta, gamma, delta});
            }
        return r;
    }

    auto bmk(size_t m, size_t k) -> BmkResult
    {
        auto u = mu(m, k);
        BmkResult r;
        r.m = m;
        r.k = k;
        r.mu = u.value;
        r.value = std::max(u.value.value_or(0), m * k);
        if (u.value && *u.value >= m * k)
            r.argmax = std::move(u.argmax);
        if (r.value < m * k || r.value >= 2 * m * k || r.value < 4)
            throw std::logic_error{"B(m,k) outside [max(4,mk), 2mk)"};
        return r;
    }

    auto two_slupecki_predicate(size_t m, size_t n, size_t k) -> bool
    {
        if (n < 2)
            throw Error{"n must be at least 2"};
        return n > bmk(m, k).value + 1;
    }

    namespace
    {
        auto leq(const Digraph & g, Vertex x, Vertex y) -> bool { return g.has_arc(x, y); }

        void check_witness(const Digraph & g, const OperationTable & f, const char * what)
        {
            auto c = classify(f);
            if (! is_polymorphism(g, f) || ! c.surjective || c.kind != OperationKind::essential)
                throw std::logic_error{std::string{what} + ": construction failed verification"};
        }
    }

    auto ternary_witness(size_t m, size_t n, size_t k) -> OperationTable
    {
        OrdinalSumPoset p{m, n, k};
        const auto & g = p.graph;
        const size_t size = p.size();
        const Vertex a0 = p.a(0), c0 = p.c(0), b0 = p.b(0);

        vector<Vertex> values;
        values.reserve(size * size * size);
        for (Vertex x = 0; x < size; ++x)
            for (Vertex y = 0; y < size; ++y)
                for (Vertex z = 0; z < size; ++z) {
                    std::set<Vertex> assigned;
                    if (x == y && y == z && ! p.in_b(x))
                        assigned.insert(x);
                    for (size_t i = 0; i < n; ++i) {
                        Vertex bi = p.b(i);
                        if (x == a0 && y == c0 && z == bi)
                            assigned.insert(bi);
                        else if (leq(g, x, a0) && leq(g, y, c0) && leq(g, z, bi))
                            assigned.insert(a0);
                        else if (leq(g, a0, x) && leq(g, c0, y) && leq(g, bi, z))
                            assigned.insert(c0);
                    }
                    if (assigned.size() > 1)
                        throw std::logic_error{"ternary witness is not well defined"};
                    values.push_back(assigned.empty() ? b0 : *assigned.begin());
                }

        OperationTable f{size, 3, std::move(values)};
        check_witness(g, f, "ternary_witness");
        return f;
    }

    auto level_tables(size_t m, size_t k) -> std::pair<OperationTable, OperationTable>
    {
        auto b = bmk(m, k);
        if (b.argmax.empty())
            return {OperationTable::projection(m, 2, 0), OperationTable::projection(k, 2, 1)};

        auto [alpha, beta, gamma, delta] = b.argmax.front();
        // zero on the first `rows` rows and `cols` columns, onto 1..s-1 on the remaining block
        auto block = [](size_t s, size_t rows, size_t cols) {
            vector<Vertex> v(s * s);
            for (size_t i = 0; i < s; ++i)
                for (size_t j = 0; j < s; ++j)
                    v[i * s + j] = (i < rows || j < cols) ? 0 : Vertex(((i - rows) * (s - cols) + (j - cols)) % (s - 1) + 1);
            return OperationTable{s, 2, std::move(v)};
        };
        return {block(m, alpha, beta), block(k, delta, gamma)};
    }

    auto lr_profile(const OrdinalSumPoset & p, const OperationTable & f) -> LRProfile
    {
        if (f.base() != p.size() || f.arity() != 2)
            throw Error{"expected a binary operation on the poset"};
        const size_t s = p.size();

        auto scan = [&](const vector<Vertex> & level, auto inside, vector<Vertex> & l, vector<Vertex> & lv,
                        vector<Vertex> & r, vector<Vertex> & rv) {
            for (auto x : level)
                for (auto y : level)
                    if (! inside(f[x * s + y]))
                        throw Error{"f does not map the level square into the level"};
            for (auto x : level) {
                Vertex first = f[x * s + level.front()];
                if (std::all_of(level.begin(), level.end(), [&](Vertex y) { return f[x * s + y] == first; })) {
                    l.push_back(x);
                    lv.push_back(first);
                }
            }
            for (auto y : level) {
                Vertex first = f[level.front() * s + y];
                if (std::all_of(level.begin(), level.end(), [&](Vertex x) { return f[x * s + y] == first; })) {
                    r.push_back(y);
                    rv.push_back(first);
                }
            }
        };

        LRProfile prof;
        scan(p.level_a(), [&](Vertex v) { return p.in_a(v); }, prof.l_a, prof.l_a_value, prof.r_a, prof.r_a_value);
        scan(p.level_c(), [&](Vertex v) { return p.in_c(v); }, prof.l_c, prof.l_c_value, prof.r_c, prof.r_c_value);
        return prof;
    }

    auto binary_witness(size_t m, size_t n, size_t k) -> OperationTable
    {
        OrdinalSumPoset p{m, n, k};
        auto b = bmk(m, k);
        if (n > b.value + 1)
            throw Error{"no essentially binary onto polymorphism exists: n = " + std::to_string(n) + " > B(m,k) + 1 = " +
                std::to_string(b.value + 1)};

        const size_t s = p.size();
        auto [fa, fc] = level_tables(m, k);

        vector<Vertex> values(s * s, p.b(0));
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                values[p.a(i) * s + p.a(j)] = p.a(fa[i * m + j]);
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j)
                values[p.c(i) * s + p.c(j)] = p.c(fc[i * k + j]);

        OperationTable partial{s, 2, values};
        auto prof = lr_profile(p, partial);

        auto value_of = [](const vector<Vertex> & set, const vector<Vertex> & vals, Vertex v) -> std::optional<Vertex> {
            auto it = std::find(set.begin(), set.end(), v);
            if (it == set.end())
                return std::nullopt;
            return vals[it - set.begin()];
        };

        // h: (l(A) × r(C)) ∪ (l(C) × r(A)) onto B \ {b₀}
        vector<std::pair<Vertex, Vertex>> domain;
        for (auto x : prof.l_a)
            for (auto y : prof.r_c)
                domain.emplace_back(x, y);
        for (auto x : prof.l_c)
            for (auto y : prof.r_a)
                domain.emplace_back(x, y);
        if (domain.size() + 1 < n)
            throw std::logic_error{"binary_witness: domain of h too small"};

        vector<bool> is_h(s * s, false);
        for (size_t t = 0; t < domain.size(); ++t) {
            auto [x, y] = domain[t];
            values[x * s + y] = p.b(t % (n - 1) + 1);
            is_h[x * s + y] = true;
        }

        for (Vertex x = 0; x < s; ++x)
            for (Vertex y = 0; y < s; ++y) {
                if ((p.in_a(x) && p.in_a(y)) || (p.in_c(x) && p.in_c(y)) || is_h[x * s + y])
                    continue;
                std::optional<Vertex> v;
                if (p.in_b(y))
                    v = p.in_a(x) ? value_of(prof.l_a, prof.l_a_value, x) : value_of(prof.l_c, prof.l_c_value, x);
                if (! v && p.in_b(x))
                    v = p.in_a(y) ? value_of(prof.r_a, prof.r_a_value, y) : value_of(prof.r_c, prof.r_c_value, y);
                values[x * s + y] = v.value_or(p.b(0));
            }

        OperationTable f{s, 2, std::move(values)};
        check_witness(p.graph, f, "binary_witness");
        for (auto x : p.level_b())
            for (auto y : p.level_b())
                if (f[x * s + y] != p.b(0))
                    throw std::logic_error{"binary_witness: f(B²) is not {b₀}"};
        return f;
    }

    auto to_string(ClaimOutcome c) -> std::string
    {
        switch (c) {
        case ClaimOutcome::pass: return "pass";
        case ClaimOutcome::fail: return "fail";
        case ClaimOutcome::not_applicable: return "hypothesis not met";
        }
        return "?";
    }

    auto verify_claims(const OrdinalSumPoset & p, const OperationTable & f) -> vector<ClaimResult>
    {
        if (f.arity() != 2 || f.base() != p.size())
            throw Error{"expected a binary operation on the poset"};
        auto cls = classify(f);
        if (! cls.surjective || ! is_polymorphism(p.graph, f))
            throw Error{"f is not an onto binary polymorphism"};

        const size_t s = p.size();
        const auto A = p.level_a(), B = p.level_b(), C = p.level_c();
        auto at = [&](Vertex x, Vertex y) { return f[x * s + y]; };
        auto image = [&](const vector<Vertex> & xs, const vector<Vertex> & ys) {
            std::set<Vertex> im;
            for (auto x : xs)
                for (auto y : ys)
                    im.insert(at(x, y));
            return im;
        };
        auto set_of = [](const vector<Vertex> & v) { return std::set<Vertex>(v.begin(), v.end()); };
        auto subset = [](const std::set<Vertex> & a, const std::set<Vertex> & b) {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        auto outcome = [](bool ok) { return ok ? ClaimOutcome::pass : ClaimOutcome::fail; };

        vector<ClaimResult> out;
        const auto imA = image(A, A), imB = image(B, B), imC = image(C, C);

        out.push_back({1, outcome(subset(set_of(A), imA) && subset(set_of(C), imC) && subset(imB, set_of(B))),
            "f(A²) ⊇ A, f(C²) ⊇ C, f(B²) ⊆ B"});

        const bool normalized = imA == set_of(A) && imC == set_of(C);
        out.push_back({2, outcome(normalized), "f(A²) = A and f(C²) = C"});

        bool claim3 = true;
        for (const auto & [xs, ys] : {std::pair{A, B}, {B, A}, {C, B}, {B, C}})
            for (auto v : image(xs, ys))
                if (p.in_b(v) && ! imB.contains(v))
                    claim3 = false;
        out.push_back({3, outcome(claim3), "B-values on mixed A/B and B/C pairs occur in f(B²)"});

        const bool essential = cls.kind == OperationKind::essential;
        auto skip = [&](int claim, std::string why) { out.push_back({claim, ClaimOutcome::not_applicable, std::move(why)}); };

        if (! normalized || ! essential)
            skip(4, normalized ? "f is essentially unary" : "f(A²) ≠ A or f(C²) ≠ C");
        else {
            bool found = false;
            for (auto a : A)
                for (auto c : C)
                    if (p.in_b(at(a, c)) || p.in_b(at(c, a)))
                        found = true;
            out.push_back({4, outcome(found), "some pair of A×C ∪ C×A maps into B"});
        }

        std::optional<LRProfile> prof;
        if (normalized)
            prof = lr_profile(p, f);
        auto member = [](const vector<Vertex> & v, Vertex x) { return std::find(v.begin(), v.end(), x) != v.end(); };

        if (! normalized)
            skip(5, "f(A²) ≠ A or f(C²) ≠ C");
        else {
            bool ok = true;
            for (auto b0 : imB)
                for (auto a : A)
                    for (auto c : C) {
                        auto v = at(a, c);
                        if (p.in_b(v) && v != b0 && ! (member(prof->l_a, a) && member(prof->r_c, c)))
                            ok = false;
                        v = at(c, a);
                        if (p.in_b(v) && v != b0 && ! (member(prof->l_c, c) && member(prof->r_a, a)))
                            ok = false;
                    }
            out.push_back({5, outcome(ok), "B-values other than b₀ on A×C, C×A lie on l/r pairs"});
        }

        if (! normalized || ! essential) {
            skip(6, normalized ? "f is essentially unary" : "f(A²) ≠ A or f(C²) ≠ C");
            skip(7, normalized ? "f is essentially unary" : "f(A²) ≠ A or f(C²) ≠ C");
        }
        else {
            out.push_back({6, outcome(imB.size() == 1), "|f(B²)| = 1"});
            size_t M = prof->l_a.size() * prof->r_c.size() + prof->l_c.size() * prof->r_a.size();
            auto b = bmk(p.m, p.k).value;
            out.push_back({7, outcome(M <= b), "|l(A)×r(C) ∪ l(C)×r(A)| = " + std::to_string(M) + " ≤ B(m,k) = " + std::to_string(b)});
        }
        return out;
    }
}
