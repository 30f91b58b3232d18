#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"

namespace superhopf {

using TensorKey = std::vector<Monomial>;
using TensorTerms = SparseVector<TensorKey, std::greater<TensorKey>>;

// Sparse combination of pure tensors m_1 (x) ... (x) m_k of normal monomials.
class TensorElement {
public:
    TensorElement(PresentationPtr p, std::size_t arity) : p_(std::move(p)), arity_(arity) {}
    TensorElement(PresentationPtr p, std::size_t arity, TensorTerms terms)
        : p_(std::move(p)), arity_(arity), terms_(std::move(terms))
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = superhopf::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }

    // a_1 (x) ... (x) a_k, expanded.
    static TensorElement pure(const std::vector<Element>& legs)
    {
        if (legs.empty())
            throw InputError("pure tensor needs at least one leg");
        const auto& p = legs.front().presentation();
        TensorTerms acc;
        acc.emplace(TensorKey{}, 1);
        for (const auto& leg : legs) {
            leg.same(legs.front());
            TensorTerms next;
            for (const auto& [key, c] : acc) {
                for (const auto& [m, d] : leg.terms()) {
                    TensorKey k = key;
                    k.push_back(m);
                    next.emplace(std::move(k), c * d);
                }
            }
            acc = std::move(next);
        }
        return TensorElement(p, legs.size(), std::move(acc));
    }

    const PresentationPtr& presentation() const { return p_; }
    std::size_t arity() const { return arity_; }
    const TensorTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(TensorKey key, const Scalar& c)
    {
        if (key.size() != arity_)
            throw InputError("tensor arity mismatch");
        auto [it, inserted] = terms_.try_emplace(std::move(key), 0);
        it->second += c;
        if (superhopf::is_zero(it->second))
            terms_.erase(it);
    }

    TensorElement& operator+=(const TensorElement& o)
    {
        same(o);
        axpy(terms_, Scalar(1), o.terms_);
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o)
    {
        same(o);
        axpy(terms_, Scalar(-1), o.terms_);
        return *this;
    }
    TensorElement& operator*=(const Scalar& c)
    {
        scale_in_place(terms_, c);
        return *this;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }
    friend TensorElement operator-(TensorElement a) { return a *= Scalar(-1); }

    friend bool operator==(const TensorElement& a, const TensorElement& b)
    {
        return a.p_ == b.p_ && a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    void same(const TensorElement& o) const
    {
        if (p_ != o.p_)
            throw PresentationMismatch();
        if (arity_ != o.arity_)
            throw InputError("tensor arity mismatch");
    }

private:
    PresentationPtr p_;
    std::size_t arity_;
    TensorTerms terms_;
};

// Legwise product. In super mode the Koszul sign counts every odd leg of the
// right factor passing an odd leg of the left factor that sits to its right:
// (a (x) b)(a' (x) b') = (-1)^{p(a')p(b)} aa' (x) bb'.
inline TensorElement tensor_mul(const TensorElement& s, const TensorElement& w, ExtensionMode mode)
{
    s.same(w);
    const auto& p = s.presentation();
    const std::size_t k = s.arity();
    TensorElement out(p, k);
    for (const auto& [ka, ca] : s.terms()) {
        for (const auto& [kb, cb] : w.terms()) {
            int sign_exp = 0;
            if (mode == ExtensionMode::Super) {
                for (std::size_t j = 0; j < k; ++j) {
                    if (p->parity(kb[j]) == 0)
                        continue;
                    for (std::size_t i = j + 1; i < k; ++i)
                        sign_exp += p->parity(ka[i]);
                }
            }
            std::vector<Terms> legs;
            legs.reserve(k);
            bool zero = false;
            for (std::size_t i = 0; i < k && !zero; ++i) {
                Word word = p->word(ka[i]);
                const Word wb = p->word(kb[i]);
                word.insert(word.end(), wb.begin(), wb.end());
                legs.push_back(p->reduce(word, 1));
                zero = legs.back().empty();
            }
            if (zero)
                continue;
            const Scalar c = sign_power(sign_exp) * ca * cb;
            // expand the product of the leg combinations
            std::vector<std::pair<TensorKey, Scalar>> acc{{TensorKey{}, c}};
            for (const auto& leg : legs) {
                std::vector<std::pair<TensorKey, Scalar>> next;
                next.reserve(acc.size() * leg.size());
                for (const auto& [key, coeff] : acc) {
                    for (const auto& [m, d] : leg) {
                        TensorKey nk = key;
                        nk.push_back(m);
                        next.emplace_back(std::move(nk), coeff * d);
                    }
                }
                acc = std::move(next);
            }
            for (auto& [key, coeff] : acc)
                out.add_term(std::move(key), coeff);
        }
    }
    return out;
}

inline TensorElement tensor_one(const PresentationPtr& p, std::size_t arity)
{
    TensorElement t(p, arity);
    t.add_term(TensorKey(arity, p->one()), 1);
    return t;
}

inline std::string to_string(const TensorElement& t)
{
    if (t.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : t.terms()) {
        const bool negative = sgn(c) < 0;
        Scalar mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mag != 1)
            out += to_string(mag) + "*";
        for (std::size_t i = 0; i < key.size(); ++i) {
            if (i)
                out += "⊗";
            out += t.presentation()->to_string(key[i]);
        }
    }
    return out;
}

} // namespace superhopf
