#pragma once

// Filtration dimensions, detected growth degree, module finiteness and
// degree-bounded centralizers.

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf.hpp"
#include "report.hpp"
#include "subalgebra.hpp"

namespace superhopf {

inline std::size_t filtration_dim(const PresentationPtr& p, const std::vector<Element>& gens, int n)
{
    return SpannedSubalgebra(p, gens, n).dimension(n);
}

inline std::vector<Element> all_generators(const PresentationPtr& p)
{
    std::vector<Element> out;
    for (GeneratorIndex i = 0; i < p->size(); ++i)
        out.push_back(Element::generator(p, i));
    return out;
}

inline std::string join(const std::vector<Element>& v, const char* sep = ",")
{
    std::string out;
    for (const auto& e : v)
        out += (out.empty() ? "" : sep) + to_string(e);
    return out;
}

struct GrowthReport {
    static constexpr std::size_t stable_run = 3;
    static constexpr int printed_differences = 3;

    std::string generator_set;
    std::vector<long long> dims;
    // differences[k][n] = k-th backward difference at n, defined for n >= k
    std::vector<std::vector<std::optional<long long>>> differences;
    std::optional<int> detected_degree;
    std::optional<int> onset;

    int n_max() const { return static_cast<int>(dims.size()) - 1; }
};

// Smallest d whose d-th difference ends in a run of >= 3 equal positive
// values; the onset is the first n of that run.
inline void detect_degree(GrowthReport& r)
{
    const std::size_t n = r.dims.size();
    r.differences.clear();
    r.detected_degree.reset();
    r.onset.reset();
    std::vector<std::optional<long long>> row(r.dims.begin(), r.dims.end());
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            std::vector<std::optional<long long>> next(n);
            for (std::size_t i = k; i < n; ++i)
                next[i] = *row[i] - *row[i - 1];
            row = std::move(next);
        }
        r.differences.push_back(row);
        if (r.detected_degree)
            continue;
        const long long last = *row[n - 1];
        std::size_t start = n - 1;
        while (start > k && *row[start - 1] == last)
            --start;
        if (last > 0 && n - start >= GrowthReport::stable_run) {
            r.detected_degree = static_cast<int>(k);
            r.onset = static_cast<int>(start);
        }
    }
}

inline GrowthReport growth_series(const PresentationPtr& p, const std::vector<Element>& gens, int n_max)
{
    if (n_max < 0)
        throw InputError("nMax must be non-negative");
    const SpannedSubalgebra s(p, gens, n_max);
    GrowthReport r;
    r.generator_set = join(gens);
    for (int n = 0; n <= n_max; ++n)
        r.dims.push_back(static_cast<long long>(s.dimension(n)));
    detect_degree(r);
    return r;
}

inline void write_growth_report(std::ostream& out, const GrowthReport& r)
{
    out << "# generators: " << r.generator_set << '\n';
    out << "# window: 0.." << r.n_max() << '\n';
    for (std::size_t n = 0; n < r.dims.size(); ++n) {
        out << n << ' ' << r.dims[n];
        for (int k = 1; k <= GrowthReport::printed_differences; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            if (idx < r.differences.size() && r.differences[idx][n])
                out << ' ' << *r.differences[idx][n];
            else
                out << " -";
        }
        out << '\n';
    }
    if (r.detected_degree)
        out << "degree: " << *r.detected_degree << " onset: " << *r.onset << '\n';
    else
        out << "degree: not-stabilized onset: -\n";
}

inline std::string to_string(const GrowthReport& r)
{
    std::ostringstream s;
    write_growth_report(s, r);
    return s.str();
}

// ---------------------------------------------------------------------------
// Module finiteness

enum class Side { Left, Right, Both };

inline const char* to_string(Side s)
{
    switch (s) {
    case Side::Left:
        return "left";
    case Side::Right:
        return "right";
    default:
        return "both";
    }
}

inline Side parse_side(std::string_view s)
{
    if (s == "left")
        return Side::Left;
    if (s == "right")
        return Side::Right;
    if (s == "both")
        return Side::Both;
    throw InputError("side must be left, right or both");
}

struct ModuleFinitenessCertificate {
    std::vector<Element> sub_generators;
    std::vector<Element> module_generators;
    Side side = Side::Both;
    int degree_checked = 0;
    CertificateReport report;

    Status status() const { return report.status; }
};

namespace detail {

// Every normal monomial of degree exactly n, n = 0..n_max, lies in the span
// of s*m (left) or m*s (right), s over level n of the subalgebra.
inline void module_finite_side(const PresentationPtr& p, const SpannedSubalgebra& sub,
                               const std::vector<Element>& module_gens, bool left, int n_max, CertificateReport& r)
{
    ElementBasis span;
    const auto monomials = normal_monomials(*p, n_max);
    std::size_t next = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& s : sub.new_vectors(n))
            for (const auto& m : module_gens)
                span.insert((left ? s * m : m * s).terms());
        std::size_t escaped = 0;
        for (; next < monomials.size() && monomials[next].degree() == n; ++next) {
            const Element e = Element::monomial(p, monomials[next]);
            const bool ok = span.contains(e.terms());
            escaped += ok ? 0 : 1;
            r.record(ok, std::string(left ? "left" : "right") + " n=" + std::to_string(n) + " " + to_string(e),
                     "in span", "outside span");
        }
        if (escaped)
            r.notes.push_back(std::string(left ? "left" : "right") + " degree " + std::to_string(n) + ": " +
                              std::to_string(escaped) + " monomials outside the span");
    }
}

} // namespace detail

inline ModuleFinitenessCertificate module_finite_check(const PresentationPtr& p, const std::vector<Element>& sub_gens,
                                                       const std::vector<Element>& module_gens, Side side, int n_max)
{
    if (n_max < 0)
        throw InputError("nMax must be non-negative");
    if (module_gens.empty())
        throw InputError("at least one module generator is required");
    for (const auto& m : module_gens)
        m.same(Element(p));
    ModuleFinitenessCertificate cert;
    cert.sub_generators = sub_gens;
    cert.module_generators = module_gens;
    cert.side = side;
    cert.degree_checked = n_max;
    CertificateReport& r = cert.report;
    r.check_name = "module-finite";
    r.inputs = "sub {" + join(sub_gens) + "} module gens {" + join(module_gens) + "}";
    r.param("side", to_string(side)).param("n-max", std::to_string(n_max));
    const SpannedSubalgebra sub(p, sub_gens, n_max);
    if (side != Side::Right)
        detail::module_finite_side(p, sub, module_gens, true, n_max, r);
    if (side != Side::Left)
        detail::module_finite_side(p, sub, module_gens, false, n_max, r);
    return cert;
}

// PASS when the subalgebra's detected growth degree is strictly below the
// whole algebra's (so the algebra cannot be a finitely generated module over
// it), FAIL when the degrees agree, INCONCLUSIVE when either has not
// stabilized within the window.
inline CertificateReport growth_obstruction(const PresentationPtr& p, const std::vector<Element>& sub_gens, int n_max)
{
    CertificateReport r;
    r.check_name = "growth-obstruction";
    r.inputs = "sub {" + join(sub_gens) + "}";
    r.param("n-max", std::to_string(n_max));
    const GrowthReport sub = growth_series(p, sub_gens, n_max);
    const GrowthReport full = growth_series(p, all_generators(p), n_max);
    auto deg = [](const GrowthReport& g) {
        return g.detected_degree ? std::to_string(*g.detected_degree) : std::string("not-stabilized");
    };
    r.notes.push_back("sub degree " + deg(sub) + ", full degree " + deg(full) + " over 0.." + std::to_string(n_max));
    if (!sub.detected_degree || !full.detected_degree) {
        r.status = Status::Inconclusive;
        return r;
    }
    const bool obstruction = *sub.detected_degree < *full.detected_degree;
    r.record(obstruction, "growth degrees", "sub < full",
             std::to_string(*sub.detected_degree) + " vs " + std::to_string(*full.detected_degree));
    if (obstruction)
        r.notes.push_back("obstruction: " + std::to_string(*sub.detected_degree) + " < " +
                          std::to_string(*full.detected_degree) +
                          "; equal growth degree is necessary for module finiteness");
    return r;
}

// Row-reduced basis of {c : cg - gc = 0 for all g} among elements of degree
// <= bound, optionally restricted to one Z-degree.
inline std::vector<Element> centralizer_degree_bounded(const PresentationPtr& p,
                                                       const std::vector<Element>& constraint_gens, int bound,
                                                       std::optional<int> z_degree = std::nullopt)
{
    using Key = std::pair<std::size_t, Monomial>;
    KernelSolver<Key, Monomial, std::less<Key>, MonomialOrder> solver;
    for (const auto& m : normal_monomials(*p, bound)) {
        if (z_degree) {
            const auto z = p->z_degree(m);
            if (!z)
                throw InputError("Z-degree filter needs declared generator degrees");
            if (*z != *z_degree)
                continue;
        }
        const Element c = Element::monomial(p, m);
        SparseVector<Key> image;
        for (std::size_t g = 0; g < constraint_gens.size(); ++g) {
            const Element bracket = commutator(c, constraint_gens[g]);
            for (const auto& [mm, coef] : bracket.terms())
                image.emplace(Key{g, mm}, coef);
        }
        solver.add_column(std::move(image), Terms{{m, Scalar(1)}});
    }
    std::vector<Element> out;
    for (auto& v : solver.kernel())
        out.emplace_back(p, std::move(v));
    return out;
}

// Growth of U(sub) for a sub Lie superalgebra, on its own basis generators.
inline GrowthReport enveloping_growth_bound(const LieSuperAlgebra& g, const SubSuperSpace& sub, int n_max)
{
    if (sub.parent().dimension() != g.dimension())
        throw InvalidStructure("subspace does not belong to the given Lie superalgebra");
    const LieSuperAlgebra a = restrict_to(sub);
    const HopfStructureMaps u = enveloping(a);
    return growth_series(u.carrier(), all_generators(u.carrier()), n_max);
}

} // namespace superhopf
