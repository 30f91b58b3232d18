#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "presentation.hpp"

namespace superhopf {

// Sparse exact linear combination of PBW normal monomials.
class Element {
public:
    explicit Element(PresentationPtr p) : p_(std::move(p)) {}
    Element(PresentationPtr p, Terms terms) : p_(std::move(p)), terms_(std::move(terms)) { prune(); }

    static Element zero(const PresentationPtr& p) { return Element(p); }
    static Element scalar(const PresentationPtr& p, const Scalar& c)
    {
        return monomial(p, p->one(), c);
    }
    static Element one(const PresentationPtr& p) { return scalar(p, 1); }

    static Element monomial(const PresentationPtr& p, const Monomial& m, const Scalar& c = 1)
    {
        if (!p->is_normal(m))
            throw InputError("monomial is not in normal form");
        Terms t;
        if (!superhopf::is_zero(c))
            t.emplace(m, c);
        return Element(p, std::move(t));
    }

    static Element generator(const PresentationPtr& p, GeneratorIndex i)
    {
        return normalize_word(p, Word{i});
    }
    static Element generator(const PresentationPtr& p, std::string_view name)
    {
        return generator(p, p->index_of(name));
    }

    // Normal form of c * w.
    static Element normalize_word(const PresentationPtr& p, const Word& w, const Scalar& c = 1)
    {
        return Element(p, p->reduce(w, c));
    }

    const PresentationPtr& presentation() const { return p_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    // -1 for the zero element.
    int degree() const
    {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, m.degree());
        return d;
    }

    // Parity if every monomial has the same parity; zero counts as even.
    std::optional<int> parity() const
    {
        std::optional<int> p;
        for (const auto& [m, c] : terms_) {
            const int q = p_->parity(m);
            if (p && *p != q)
                return std::nullopt;
            p = q;
        }
        return p.value_or(0);
    }

    std::optional<int> z_degree() const
    {
        std::optional<int> z;
        for (const auto& [m, c] : terms_) {
            const auto q = p_->z_degree(m);
            if (!q || (z && *z != *q))
                return std::nullopt;
            z = q;
        }
        return z;
    }

    Element& operator+=(const Element& other)
    {
        same(other);
        axpy(terms_, Scalar(1), other.terms_);
        return *this;
    }
    Element& operator-=(const Element& other)
    {
        same(other);
        axpy(terms_, Scalar(-1), other.terms_);
        return *this;
    }
    Element& operator*=(const Scalar& c)
    {
        scale_in_place(terms_, c);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Scalar(-1); }
    friend Element operator*(const Scalar& c, Element a) { return a *= c; }
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b)
    {
        return a.p_ == b.p_ && a.terms_ == b.terms_;
    }

    void same(const Element& other) const
    {
        if (p_ != other.p_)
            throw PresentationMismatch();
    }

private:
    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (superhopf::is_zero(it->second))
                it = terms_.erase(it);
            else
                ++it;
        }
    }

    PresentationPtr p_;
    Terms terms_;
};

inline Element normalize(const PresentationPtr& p, const Word& w, const Scalar& c = 1)
{
    return Element::normalize_word(p, w, c);
}

inline Element normalize(const PresentationPtr& p, const std::vector<std::string>& names, const Scalar& c = 1)
{
    Word w;
    for (const auto& n : names)
        w.push_back(p->index_of(n));
    return normalize(p, w, c);
}

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element scale(const Scalar& c, const Element& a) { return c * a; }

inline Element mul(const Element& a, const Element& b)
{
    a.same(b);
    const auto& p = a.presentation();
    std::map<Word, Scalar> pending;
    for (const auto& [ma, ca] : a.terms()) {
        const Word wa = p->word(ma);
        for (const auto& [mb, cb] : b.terms()) {
            Word w = wa;
            const Word wb = p->word(mb);
            w.insert(w.end(), wb.begin(), wb.end());
            auto [it, inserted] = pending.try_emplace(std::move(w), 0);
            it->second += ca * cb;
            if (is_zero(it->second))
                pending.erase(it);
        }
    }
    return Element(p, p->reduce_all(std::move(pending)));
}

inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

inline Element power(const Element& a, int n)
{
    Element r = Element::one(a.presentation());
    for (int k = 0; k < n; ++k)
        r = r * a;
    return r;
}

inline Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

// Canonical text: terms in MonomialOrder, coefficients p/q, unit coefficients
// omitted. Parses back to the same element.
inline std::string to_string(const Element& e)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : e.terms()) {
        Scalar mag = abs(c);
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (m.is_one()) {
            out += to_string(mag);
        } else {
            if (mag != 1)
                out += to_string(mag) + "*";
            out += e.presentation()->to_string(m);
        }
    }
    return out;
}

} // namespace superhopf
