#pragma once

// Finite-dimensional Lie superalgebras given by dense structure constants.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "expression.hpp"
#include "linear.hpp"
#include "presentation.hpp"

namespace superhopf {

using Coords = std::vector<Scalar>;

inline bool is_zero(const Coords& v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return is_zero(c); });
}

inline Coords operator+(Coords a, const Coords& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b.at(i);
    return a;
}

inline Coords operator-(Coords a, const Coords& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b.at(i);
    return a;
}

inline Coords operator*(const Scalar& c, Coords a)
{
    for (auto& x : a)
        x *= c;
    return a;
}

inline SparseVector<std::size_t> to_sparse(const Coords& v)
{
    SparseVector<std::size_t> s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i]))
            s.emplace(i, v[i]);
    return s;
}

inline Coords to_dense(const SparseVector<std::size_t>& s, std::size_t n)
{
    Coords v(n, Scalar(0));
    for (const auto& [i, c] : s)
        v.at(i) = c;
    return v;
}

class LieSuperAlgebra {
public:
    // table[i][j] = [b_i, b_j] in basis coordinates.
    LieSuperAlgebra(std::vector<GeneratorSymbol> basis, std::vector<std::vector<Coords>> table)
        : basis_(std::move(basis)), table_(std::move(table))
    {
        const std::size_t n = basis_.size();
        if (table_.size() != n)
            throw InvalidStructure("bracket table has wrong size");
        for (const auto& row : table_) {
            if (row.size() != n)
                throw InvalidStructure("bracket table has wrong size");
            for (const auto& v : row)
                if (v.size() != n)
                    throw InvalidStructure("bracket value has wrong size");
        }
        for (const auto& b : basis_)
            if (b.parity != 0 && b.parity != 1)
                throw InvalidStructure("parity must be 0 or 1");
    }

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<GeneratorSymbol>& basis() const { return basis_; }
    const GeneratorSymbol& basis(std::size_t i) const { return basis_.at(i); }
    int parity(std::size_t i) const { return basis_.at(i).parity; }

    std::optional<std::size_t> find(std::string_view name) const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].name == name)
                return i;
        return std::nullopt;
    }
    std::size_t index_of(std::string_view name) const
    {
        if (auto i = find(name))
            return *i;
        throw InputError("unknown basis element '" + std::string(name) + "'");
    }

    Coords zero() const { return Coords(dimension(), Scalar(0)); }
    Coords unit(std::size_t i) const
    {
        Coords v = zero();
        v.at(i) = 1;
        return v;
    }
    Coords unit(std::string_view name) const { return unit(index_of(name)); }

    const Coords& bracket(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

    Coords bracket(const Coords& a, const Coords& b) const
    {
        Coords out = zero();
        for (std::size_t i = 0; i < dimension(); ++i) {
            if (is_zero(a[i]))
                continue;
            for (std::size_t j = 0; j < dimension(); ++j) {
                if (is_zero(b[j]))
                    continue;
                const Scalar c = a[i] * b[j];
                for (std::size_t k = 0; k < dimension(); ++k)
                    out[k] += c * table_[i][j][k];
            }
        }
        return out;
    }

    // Parity of a nonzero homogeneous vector.
    std::optional<int> parity(const Coords& v) const
    {
        std::optional<int> p;
        for (std::size_t i = 0; i < dimension(); ++i) {
            if (is_zero(v[i]))
                continue;
            if (p && *p != basis_[i].parity)
                return std::nullopt;
            p = basis_[i].parity;
        }
        return p;
    }

    std::string to_string(const Coords& v) const
    {
        std::string out;
        for (std::size_t i = 0; i < dimension(); ++i) {
            const Scalar& c = v.at(i);
            if (is_zero(c))
                continue;
            const bool negative = sgn(c) < 0;
            Scalar mag = abs(c);
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (mag != 1)
                out += superhopf::to_string(mag) + "*";
            out += basis_[i].name;
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<GeneratorSymbol> basis_;
    std::vector<std::vector<Coords>> table_;
};

using LieAlgebraPtr = std::shared_ptr<const LieSuperAlgebra>;

struct Violation {
    std::string kind; // antisymmetry | jacobi | parity | z-degree
    std::string where;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool valid() const { return violations.empty(); }
};

// Checks super antisymmetry, parity and z-degree additivity on basis pairs and
// the super Jacobi identity [a,[b,c]] = [[a,b],c] + (-1)^{p(a)p(b)} [b,[a,c]]
// on basis triples.
inline ValidationReport validate(const LieSuperAlgebra& g)
{
    ValidationReport report;
    const std::size_t n = g.dimension();
    const auto& b = g.basis();
    const bool graded = std::all_of(b.begin(), b.end(), [](const GeneratorSymbol& s) { return s.z_degree.has_value(); });
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::string where = "[" + b[i].name + "," + b[j].name + "]";
            const Coords sum = g.bracket(i, j) + sign_power(g.parity(i) * g.parity(j)) * g.bracket(j, i);
            if (!is_zero(sum))
                report.violations.push_back({"antisymmetry", where, g.to_string(sum) + " != 0"});
            const Coords& v = g.bracket(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(v[k]))
                    continue;
                if (g.parity(k) != (g.parity(i) + g.parity(j)) % 2)
                    report.violations.push_back({"parity", where, "component " + b[k].name});
                if (graded && *b[k].z_degree != *b[i].z_degree + *b[j].z_degree)
                    report.violations.push_back({"z-degree", where, "component " + b[k].name});
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Coords a = g.unit(i);
        for (std::size_t j = 0; j < n; ++j) {
            const Coords bb = g.unit(j);
            for (std::size_t k = 0; k < n; ++k) {
                const Coords c = g.unit(k);
                const Coords lhs = g.bracket(a, g.bracket(bb, c));
                const Coords rhs = g.bracket(g.bracket(a, bb), c) +
                                   sign_power(g.parity(i) * g.parity(j)) * g.bracket(bb, g.bracket(a, c));
                if (lhs != rhs)
                    report.violations.push_back({"jacobi", "(" + b[i].name + "," + b[j].name + "," + b[k].name + ")",
                                                 g.to_string(lhs) + " != " + g.to_string(rhs)});
            }
        }
    }
    return report;
}

namespace detail {

using Matrix2 = std::array<Scalar, 4>; // row-major 2x2

inline Matrix2 matmul(const Matrix2& a, const Matrix2& b)
{
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

} // namespace detail

// pl(1,1): basis x = I, y = E11 (even), u = E12, v = E21 (odd). Brackets are
// the matrix super-commutators AB - (-1)^{p(A)p(B)} BA, re-expressed in the
// basis by exact elimination.
inline LieSuperAlgebra pl11()
{
    using detail::Matrix2;
    const std::vector<GeneratorSymbol> basis = {
        {"x", 0, 2, std::nullopt}, {"y", 0, 0, std::nullopt}, {"u", 1, 1, std::nullopt}, {"v", 1, 1, std::nullopt}};
    const std::vector<Matrix2> mats = {
        Matrix2{1, 0, 0, 1}, Matrix2{1, 0, 0, 0}, Matrix2{0, 1, 0, 0}, Matrix2{0, 0, 1, 0}};
    const std::size_t n = basis.size();

    // Coordinates of a matrix: solve sum_k c_k mats[k] = m via a kernel of
    // the augmented system (columns: basis matrices, then -m).
    auto coords_of = [&](const Matrix2& m) {
        KernelSolver<std::size_t, std::size_t> solver;
        for (std::size_t k = 0; k <= n; ++k) {
            SparseVector<std::size_t> image;
            for (std::size_t e = 0; e < 4; ++e) {
                const Scalar value = k < n ? mats[k][e] : Scalar(-m[e]);
                if (!is_zero(value))
                    image.emplace(e, value);
            }
            solver.add_column(std::move(image), SparseVector<std::size_t>{{k, Scalar(1)}});
        }
        for (const auto& kv : solver.kernel()) {
            auto last = kv.find(n);
            if (last == kv.end())
                continue;
            Coords c(n, Scalar(0));
            for (const auto& [k, value] : kv)
                if (k < n)
                    c[k] = value / last->second;
            return c;
        }
        throw InvalidStructure("matrix is outside the span of the pl(1,1) basis");
    };

    std::vector<std::vector<Coords>> table(n, std::vector<Coords>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Matrix2 ab = detail::matmul(mats[i], mats[j]);
            const Matrix2 ba = detail::matmul(mats[j], mats[i]);
            const Scalar s = sign_power(basis[i].parity * basis[j].parity);
            Matrix2 br;
            for (std::size_t e = 0; e < 4; ++e)
                br[e] = ab[e] - s * ba[e];
            table[i][j] = coords_of(br);
        }
    }
    return LieSuperAlgebra(basis, std::move(table));
}

// Graded subspace of a Lie superalgebra, stored as reduced row-echelon rows
// (each row is parity-homogeneous because the subspace is graded).
class SubSuperSpace {
public:
    SubSuperSpace(LieAlgebraPtr parent, const std::vector<Coords>& spanning) : parent_(std::move(parent))
    {
        EchelonBasis<std::size_t> basis;
        for (const auto& v : spanning) {
            if (v.size() != parent_->dimension())
                throw InputError("vector has wrong dimension");
            if (!is_zero(v) && !parent_->parity(v))
                throw InputError("vector " + parent_->to_string(v) + " is not parity-homogeneous");
            basis.insert(to_sparse(v));
        }
        for (const auto& row : basis.rref())
            rows_.push_back(to_dense(row, parent_->dimension()));
    }

    const LieSuperAlgebra& parent() const { return *parent_; }
    const LieAlgebraPtr& parent_ptr() const { return parent_; }
    const std::vector<Coords>& basis() const { return rows_; }
    std::size_t dimension() const { return rows_.size(); }

    bool contains(const Coords& v) const { return coordinates(v).has_value(); }

    // Coordinates in this basis, or nullopt when v is outside the subspace.
    std::optional<Coords> coordinates(const Coords& v) const
    {
        Coords c(rows_.size(), Scalar(0));
        Coords rest = v;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t pivot = pivot_of(r);
            c[r] = rest[pivot];
            rest = rest - c[r] * rows_[r];
        }
        if (!is_zero(rest))
            return std::nullopt;
        return c;
    }

    std::size_t pivot_of(std::size_t r) const
    {
        const Coords& row = rows_.at(r);
        for (std::size_t i = 0; i < row.size(); ++i)
            if (!is_zero(row[i]))
                return i;
        return row.size();
    }

    friend bool operator==(const SubSuperSpace& a, const SubSuperSpace& b) { return a.rows_ == b.rows_; }

    std::string to_string() const
    {
        std::string out = "span{";
        for (std::size_t r = 0; r < rows_.size(); ++r)
            out += (r ? ", " : "") + parent_->to_string(rows_[r]);
        return out + "}";
    }

private:
    LieAlgebraPtr parent_;
    std::vector<Coords> rows_;
};

// Smallest bracket-closed graded subspace containing the seeds.
inline SubSuperSpace subalgebra_generated(const LieAlgebraPtr& g, const std::vector<Coords>& seeds)
{
    for (const auto& s : seeds)
        if (s.size() != g->dimension() || (!is_zero(s) && !g->parity(s)))
            throw InputError("seed is not a homogeneous vector of the algebra");
    SubSuperSpace current(g, seeds);
    for (;;) {
        std::vector<Coords> spanning = current.basis();
        for (const auto& a : current.basis())
            for (const auto& b : current.basis())
                spanning.push_back(g->bracket(a, b));
        SubSuperSpace next(g, spanning);
        if (next.dimension() == current.dimension())
            return current;
        current = std::move(next);
    }
}

struct IdealCheck {
    bool is_ideal = true;
    // [basis element, subspace vector] escaping the subspace.
    std::optional<std::pair<std::size_t, Coords>> witness;
    Coords witness_value;
};

inline IdealCheck is_ideal(const LieSuperAlgebra& g, const SubSuperSpace& s)
{
    IdealCheck out;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
        for (const auto& w : s.basis()) {
            Coords br = g.bracket(g.unit(i), w);
            if (!s.contains(br)) {
                out.is_ideal = false;
                out.witness = std::make_pair(i, w);
                out.witness_value = std::move(br);
                return out;
            }
        }
    }
    return out;
}

namespace detail {

using Poly = std::vector<Scalar>; // coefficients, lowest degree first

// Characteristic polynomial det(lambda I - M) via Faddeev-LeVerrier.
inline Poly characteristic_polynomial(const std::vector<Coords>& m)
{
    const std::size_t n = m.size();
    Poly c(n + 1, Scalar(0));
    c[n] = 1;
    std::vector<Coords> mk(n, Coords(n, Scalar(0))); // M_k
    std::vector<Coords> am(n, Coords(n, Scalar(0))); // A * M_{k-1}
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Scalar acc = 0;
                for (std::size_t l = 0; l < n; ++l)
                    acc += m[i][l] * mk[l][j];
                am[i][j] = acc;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j)
                mk[i][j] = am[i][j] + (i == j ? c[n - k + 1] : Scalar(0));
        }
        Scalar trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                trace += m[i][l] * mk[l][i];
        c[n - k] = -trace / Scalar(static_cast<long>(k));
    }
    return c;
}

inline Scalar evaluate(const Poly& p, const Scalar& x)
{
    Scalar acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// Divides p by (x - r), p(r) == 0 assumed.
inline Poly deflate(const Poly& p, const Scalar& r)
{
    const std::size_t n = p.size() - 1;
    Poly q(n, Scalar(0));
    Scalar carry = 0;
    for (std::size_t k = n; k >= 1; --k) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    return q;
}

inline std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    if (n > 1'000'000)
        throw UnsupportedFieldError("characteristic polynomial coefficients too large for rational root search");
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

// Rational roots with multiplicity; throws if some root is irrational.
inline std::vector<Scalar> rational_roots(Poly p)
{
    std::vector<Scalar> roots;
    while (p.size() > 1) {
        if (is_zero(p[0])) {
            roots.push_back(0);
            p.erase(p.begin());
            continue;
        }
        mpz_class lcm = 1;
        for (const auto& c : p)
            lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
        const mpz_class a0 = mpz_class(p.front() * lcm);
        const mpz_class an = mpz_class(p.back() * lcm);
        std::optional<Scalar> found;
        for (const auto& num : divisors(a0)) {
            for (const auto& den : divisors(an)) {
                for (int s : {1, -1}) {
                    Scalar cand(num * s, den);
                    cand.canonicalize();
                    if (is_zero(evaluate(p, cand))) {
                        found = cand;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (found)
                break;
        }
        if (!found)
            throw UnsupportedFieldError("ad spectrum is not rational");
        roots.push_back(*found);
        p = deflate(p, *found);
    }
    return roots;
}

} // namespace detail

struct Eigenpair {
    Scalar value;
    Coords vector;
};

// Exact eigenpairs of ad(h) restricted to s, eigenvalues in decreasing order,
// each eigenspace given by its row-reduced basis.
inline std::vector<Eigenpair> ad_eigen(const LieSuperAlgebra& g, const Coords& h, const SubSuperSpace& s)
{
    const std::size_t d = s.dimension();
    std::vector<Coords> m(d, Coords(d, Scalar(0))); // column k = coordinates of ad(h)(b_k)
    for (std::size_t k = 0; k < d; ++k) {
        const auto c = s.coordinates(g.bracket(h, s.basis()[k]));
        if (!c)
            throw InputError("ad(h) does not preserve the subspace");
        for (std::size_t i = 0; i < d; ++i)
            m[i][k] = (*c)[i];
    }
    std::vector<Scalar> roots = detail::rational_roots(detail::characteristic_polynomial(m));
    std::sort(roots.begin(), roots.end(), [](const Scalar& a, const Scalar& b) { return a > b; });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    std::vector<Eigenpair> out;
    for (const auto& lambda : roots) {
        KernelSolver<std::size_t, std::size_t> solver;
        for (std::size_t k = 0; k < d; ++k) {
            SparseVector<std::size_t> col;
            for (std::size_t i = 0; i < d; ++i) {
                const Scalar v = m[i][k] - (i == k ? lambda : Scalar(0));
                if (!is_zero(v))
                    col.emplace(i, v);
            }
            solver.add_column(std::move(col), SparseVector<std::size_t>{{k, Scalar(1)}});
        }
        EchelonBasis<std::size_t> vectors;
        for (const auto& kv : solver.kernel()) {
            Coords v = g.zero();
            for (const auto& [k, c] : kv)
                v = v + c * s.basis()[k];
            vectors.insert(to_sparse(v));
        }
        for (const auto& row : vectors.rref())
            out.push_back({lambda, to_dense(row, g.dimension())});
    }
    return out;
}

// The subalgebra as a standalone Lie superalgebra. Rows that are basis
// vectors keep their names; other rows are called s0, s1, ...
inline LieSuperAlgebra restrict_to(const SubSuperSpace& s)
{
    const auto& g = s.parent();
    const std::size_t d = s.dimension();
    std::vector<GeneratorSymbol> basis;
    for (std::size_t r = 0; r < d; ++r) {
        const Coords& row = s.basis()[r];
        GeneratorSymbol sym;
        const std::size_t pivot = s.pivot_of(r);
        sym.parity = *g.parity(row);
        if (row == g.unit(pivot)) {
            sym.name = g.basis(pivot).name;
            sym.z_degree = g.basis(pivot).z_degree;
        } else {
            sym.name = "s" + std::to_string(r);
        }
        basis.push_back(std::move(sym));
    }
    std::vector<std::vector<Coords>> table(d, std::vector<Coords>(d));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto c = s.coordinates(g.bracket(s.basis()[i], s.basis()[j]));
            if (!c)
                throw InvalidStructure("subspace is not closed under the bracket");
            table[i][j] = *c;
        }
    }
    return LieSuperAlgebra(std::move(basis), std::move(table));
}

namespace detail {

// Linear combinations of basis vectors; products only with a constant side.
struct LinearOps {
    struct Value {
        bool is_constant;
        Scalar constant;
        Coords v;
    };
    using value_type = Value;
    const LieSuperAlgebra* g;
    std::vector<GeneratorSymbol> names;

    Value constant(const Scalar& c) const { return {true, c, Coords(names.size(), Scalar(0))}; }
    Value symbol(std::string_view name, std::size_t pos) const
    {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i].name == name) {
                Coords v(names.size(), Scalar(0));
                v[i] = 1;
                return {false, 0, v};
            }
        }
        throw ParseError("unknown basis element '" + std::string(name) + "'", pos);
    }
    Value add(const Value& a, const Value& b) const
    {
        if (a.is_constant != b.is_constant && !(a.is_constant && is_zero(a.constant)) &&
            !(b.is_constant && is_zero(b.constant)))
            throw InputError("bracket value must be a linear combination of basis elements");
        if (a.is_constant && b.is_constant)
            return {true, a.constant + b.constant, a.v};
        return {false, 0, a.v + b.v};
    }
    Value multiply(const Value& a, const Value& b, std::size_t pos) const
    {
        if (a.is_constant)
            return b.is_constant ? Value{true, a.constant * b.constant, a.v} : Value{false, 0, a.constant * b.v};
        if (b.is_constant)
            return {false, 0, b.constant * a.v};
        throw ParseError("bracket value must be linear", pos);
    }
    Value negate(const Value& a) const { return {a.is_constant, -a.constant, Scalar(-1) * a.v}; }
};

inline std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

} // namespace detail

// Reads the definition format:
//
//   [generators]
//   x 0 2          # name parity [zdegree]
//   [brackets]
//   u v = x        # omitted brackets default to 0
//
// A bracket [b,a] that is not listed but whose mirror [a,b] is, is filled in
// by super antisymmetry.
inline LieSuperAlgebra parse_lie_definition(std::istream& in)
{
    std::vector<GeneratorSymbol> basis;
    struct Entry {
        std::string a, b, rhs;
        std::size_t line;
    };
    std::vector<Entry> entries;
    std::string section;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const std::string text = detail::trim(line);
        if (text.empty())
            continue;
        if (text.front() == '[') {
            section = text;
            if (section != "[generators]" && section != "[brackets]")
                throw InputError("line " + std::to_string(line_no) + ": unknown section " + section);
            continue;
        }
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (section == "[generators]") {
            std::istringstream fields(text);
            GeneratorSymbol sym;
            if (!(fields >> sym.name >> sym.parity) || (sym.parity != 0 && sym.parity != 1))
                throw InputError(where + "expected 'name parity [zdegree]'");
            int z;
            if (fields >> z)
                sym.z_degree = z;
            std::string extra;
            if (fields >> extra)
                throw InputError(where + "trailing text '" + extra + "'");
            basis.push_back(std::move(sym));
        } else if (section == "[brackets]") {
            const auto eq = text.find('=');
            if (eq == std::string::npos)
                throw InputError(where + "expected 'a b = expr'");
            std::istringstream lhs(text.substr(0, eq));
            Entry e;
            std::string extra;
            if (!(lhs >> e.a >> e.b) || (lhs >> extra))
                throw InputError(where + "expected two basis names before '='");
            e.rhs = text.substr(eq + 1);
            e.line = line_no;
            entries.push_back(std::move(e));
        } else {
            throw InputError(where + "content outside a section");
        }
    }
    const std::size_t n = basis.size();
    if (n == 0)
        throw InputError("no generators defined");
    auto index = [&](const std::string& name, std::size_t line_number) {
        for (std::size_t i = 0; i < n; ++i)
            if (basis[i].name == name)
                return i;
        throw InputError("line " + std::to_string(line_number) + ": unknown basis element '" + name + "'");
    };
    std::vector<std::vector<std::optional<Coords>>> given(n, std::vector<std::optional<Coords>>(n));
    detail::LinearOps ops{nullptr, basis};
    for (const auto& e : entries) {
        const std::size_t i = index(e.a, e.line);
        const std::size_t j = index(e.b, e.line);
        if (given[i][j])
            throw InputError("line " + std::to_string(e.line) + ": bracket [" + e.a + "," + e.b + "] given twice");
        auto value = parse_expression(e.rhs, ops);
        if (value.is_constant && !is_zero(value.constant))
            throw InputError("line " + std::to_string(e.line) + ": bracket value must be linear");
        given[i][j] = value.v;
    }
    std::vector<std::vector<Coords>> table(n, std::vector<Coords>(n, Coords(n, Scalar(0))));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (given[i][j])
                table[i][j] = *given[i][j];
            else if (given[j][i])
                table[i][j] = Scalar(-1) * sign_power(basis[i].parity * basis[j].parity) * *given[j][i];
        }
    }
    return LieSuperAlgebra(std::move(basis), std::move(table));
}

// A linear combination of basis vectors such as "y + 1/2*x".
inline Coords parse_lie_vector(const LieSuperAlgebra& g, std::string_view text)
{
    const auto value = parse_expression(text, detail::LinearOps{&g, g.basis()});
    if (value.is_constant && !is_zero(value.constant))
        throw InputError("expected a linear combination of basis elements");
    return value.v;
}

// Comma-separated list of Lie vectors.
inline std::vector<Coords> parse_lie_vector_list(const LieSuperAlgebra& g, std::string_view text)
{
    std::vector<Coords> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_lie_vector(g, text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

inline LieSuperAlgebra load_lie_definition(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open definition file '" + path + "'");
    return parse_lie_definition(in);
}

} // namespace superhopf
