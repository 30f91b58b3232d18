#pragma once

// Hopf structure maps on presented algebras: the enveloping Hopf
// superalgebra U(g) and its bosonization U # k[<t>].

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lie_super.hpp"
#include "tensor.hpp"

namespace superhopf {

// Delta, epsilon, S on generators; extended (anti)multiplicatively, with
// Koszul signs iff mode == Super.
class HopfStructureMaps {
public:
    HopfStructureMaps(PresentationPtr carrier, std::vector<TensorElement> delta, std::vector<Scalar> epsilon,
                      std::vector<Element> antipode, ExtensionMode mode)
        : carrier_(std::move(carrier)), delta_(std::move(delta)), epsilon_(std::move(epsilon)),
          antipode_(std::move(antipode)), mode_(mode)
    {
        const std::size_t n = carrier_->size();
        if (delta_.size() != n || epsilon_.size() != n || antipode_.size() != n)
            throw InvalidStructure("structure maps must be given on every generator");
        for (GeneratorIndex i = 0; i < n; ++i) {
            const int p = carrier_->generator(i).parity;
            if (delta_[i].presentation() != carrier_ || delta_[i].arity() != 2)
                throw InvalidStructure("coproduct image has wrong carrier or arity");
            for (const auto& [key, c] : delta_[i].terms())
                if ((carrier_->parity(key[0]) + carrier_->parity(key[1])) % 2 != p)
                    throw InvalidStructure("coproduct of '" + carrier_->generator(i).name +
                                           "' is not parity-homogeneous");
            antipode_[i].same(Element(carrier_));
            if (auto q = antipode_[i].parity(); !q || (!antipode_[i].is_zero() && *q != p))
                throw InvalidStructure("antipode of '" + carrier_->generator(i).name +
                                       "' is not parity-homogeneous");
            if (p == 1 && !is_zero(epsilon_[i]))
                throw InvalidStructure("counit must vanish on odd generators");
        }
    }

    const PresentationPtr& carrier() const { return carrier_; }
    ExtensionMode mode() const { return mode_; }
    const TensorElement& generator_coproduct(GeneratorIndex i) const { return delta_.at(i); }
    const Scalar& generator_counit(GeneratorIndex i) const { return epsilon_.at(i); }
    const Element& generator_antipode(GeneratorIndex i) const { return antipode_.at(i); }

    // Copy with one generator's coproduct replaced; used to build broken
    // structures in tests.
    HopfStructureMaps with_generator_coproduct(GeneratorIndex i, TensorElement image) const
    {
        auto delta = delta_;
        delta.at(i) = std::move(image);
        return HopfStructureMaps(carrier_, std::move(delta), epsilon_, antipode_, mode_);
    }

    TensorElement coproduct(const Monomial& m) const
    {
        TensorElement acc = tensor_one(carrier_, 2);
        for (GeneratorIndex g : carrier_->word(m))
            acc = tensor_mul(acc, delta_[g], mode_);
        return acc;
    }

    TensorElement coproduct(const Element& a) const
    {
        a.same(Element(carrier_));
        TensorElement out(carrier_, 2);
        for (const auto& [m, c] : a.terms())
            out += c * coproduct(m);
        return out;
    }

    Scalar counit(const Monomial& m) const
    {
        Scalar acc = 1;
        for (GeneratorIndex i = 0; i < carrier_->size(); ++i)
            for (int e = 0; e < m.exps[i]; ++e)
                acc *= epsilon_[i];
        return acc;
    }

    Scalar counit(const Element& a) const
    {
        a.same(Element(carrier_));
        Scalar acc = 0;
        for (const auto& [m, c] : a.terms())
            acc += c * counit(m);
        return acc;
    }

    // S(g_1 ... g_k) = sign * S(g_k) ... S(g_1); the sign reverses the odd
    // letters in super mode.
    Element antipode(const Monomial& m) const
    {
        const Word w = carrier_->word(m);
        Element acc = Element::one(carrier_);
        int odd_seen = 0;
        int sign_exp = 0;
        for (GeneratorIndex g : w) {
            if (carrier_->generator(g).parity == 1) {
                sign_exp += odd_seen;
                ++odd_seen;
            }
        }
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            acc = acc * antipode_[*it];
        if (mode_ == ExtensionMode::Super)
            acc *= sign_power(sign_exp);
        return acc;
    }

    Element antipode(const Element& a) const
    {
        a.same(Element(carrier_));
        Element out(carrier_);
        for (const auto& [m, c] : a.terms())
            out += c * antipode(m);
        return out;
    }

    // Multiplication map on one tensor leg pair: a (x) b -> ab.
    Element multiply(const TensorElement& t) const
    {
        if (t.arity() != 2)
            throw InputError("multiplication needs a 2-tensor");
        std::map<Word, Scalar> pending;
        for (const auto& [key, c] : t.terms()) {
            Word w = carrier_->word(key[0]);
            const Word w2 = carrier_->word(key[1]);
            w.insert(w.end(), w2.begin(), w2.end());
            auto [it, inserted] = pending.try_emplace(std::move(w), 0);
            it->second += c;
            if (is_zero(it->second))
                pending.erase(it);
        }
        return Element(carrier_, carrier_->reduce_all(std::move(pending)));
    }

private:
    PresentationPtr carrier_;
    std::vector<TensorElement> delta_;
    std::vector<Scalar> epsilon_;
    std::vector<Element> antipode_;
    ExtensionMode mode_;
};

namespace detail {

inline Monomial shifted(const Monomial& m, std::size_t n)
{
    Monomial out(n);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        out.exps[i] = m.exps[i];
    return out;
}

inline Terms extend_terms(const Terms& t, std::size_t n)
{
    Terms out;
    for (const auto& [m, c] : t)
        out.emplace(shifted(m, n), c);
    return out;
}

} // namespace detail

// PBW presentation of U(g) in basis order: g_j g_i -> (-1)^{p_i p_j} g_i g_j +
// [g_j, g_i] for j > i, odd generators capped at 2 with g^2 -> [g,g]/2.
inline PresentationPtr enveloping_presentation(const LieSuperAlgebra& g)
{
    const std::size_t n = g.dimension();
    PresentationSpec spec;
    spec.mode = ExtensionMode::Super;
    spec.generators = g.basis();
    for (auto& s : spec.generators)
        s.exp_cap = s.parity == 1 ? std::optional<int>(2) : std::nullopt;
    // The Presentation constructor needs generator_monomial, so build monomials by hand.
    auto gen = [n](std::size_t k) {
        Monomial m(n);
        m.exps[k] = 1;
        return m;
    };
    auto coords_terms = [&](const Coords& v, const Scalar& factor) {
        Terms t;
        for (std::size_t k = 0; k < n; ++k)
            if (!is_zero(v[k]))
                t.emplace(gen(k), factor * v[k]);
        return t;
    };
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            Terms rhs = coords_terms(g.bracket(j, i), 1);
            Monomial ordered(n);
            ordered.exps[i] = 1;
            ordered.exps[j] = 1;
            rhs.emplace(ordered, sign_power(g.parity(i) * g.parity(j)));
            spec.swap_rules.emplace(std::make_pair(j, i), std::move(rhs));
        }
        if (g.parity(j) == 1)
            spec.power_rules.emplace(j, coords_terms(g.bracket(j, j), Scalar(1, 2)));
    }
    return Presentation::create(std::move(spec));
}

// U(g) as a Hopf superalgebra: generators primitive, S(x) = -x, eps(x) = 0.
inline HopfStructureMaps enveloping(const LieSuperAlgebra& g)
{
    const auto report = validate(g);
    if (!report.valid()) {
        const auto& v = report.violations.front();
        throw InvalidStructure("not a Lie superalgebra: " + v.kind + " violated at " + v.where);
    }
    auto p = enveloping_presentation(g);
    std::vector<TensorElement> delta;
    std::vector<Scalar> eps;
    std::vector<Element> s;
    for (GeneratorIndex i = 0; i < p->size(); ++i) {
        const Element x = Element::generator(p, i);
        const Element one = Element::one(p);
        delta.push_back(TensorElement::pure({x, one}) + TensorElement::pure({one, x}));
        eps.push_back(0);
        s.push_back(-x);
    }
    return HopfStructureMaps(p, std::move(delta), std::move(eps), std::move(s), ExtensionMode::Super);
}

// U # k[<t>] with its ordinary Hopf structure; keeps U(g)'s structure so the
// biproduct projections and the sub Hopf superalgebra A \cap U can be checked.
class BosonizedAlgebra {
public:
    BosonizedAlgebra(HopfStructureMaps whole, HopfStructureMaps u_part, GeneratorIndex t_index)
        : whole_(std::move(whole)), u_part_(std::move(u_part)), t_(t_index)
    {
    }

    const HopfStructureMaps& hopf() const { return whole_; }
    const HopfStructureMaps& u_part() const { return u_part_; }
    const PresentationPtr& carrier() const { return whole_.carrier(); }
    GeneratorIndex t_index() const { return t_; }
    Element t() const { return Element::generator(carrier(), t_); }

    // U -> U # K, x -> x # 1.
    Element embed(const Element& a) const
    {
        a.same(Element(u_part_.carrier()));
        Terms out;
        for (const auto& [m, c] : a.terms())
            out.emplace(detail::shifted(m, carrier()->size()), c);
        return Element(carrier(), std::move(out));
    }

    // Inverse of embed on t-free elements.
    Element restrict_to_u(const Element& a) const
    {
        a.same(Element(carrier()));
        Terms out;
        for (const auto& [m, c] : a.terms()) {
            if (m.exps[t_] != 0)
                throw InputError("element " + to_string(a) + " is not in U");
            std::vector<int> e(m.exps.begin(), m.exps.begin() + static_cast<std::ptrdiff_t>(u_part_.carrier()->size()));
            out.emplace(Monomial(std::move(e)), c);
        }
        return Element(u_part_.carrier(), std::move(out));
    }

    bool is_t_free(const Element& a) const
    {
        for (const auto& [m, c] : a.terms())
            if (m.exps[t_] != 0)
                return false;
        return true;
    }

    // pi: u # h -> eps(u) h, onto K.
    Element project_pi(const Element& a) const
    {
        a.same(Element(carrier()));
        Terms out;
        for (const auto& [m, c] : a.terms()) {
            Monomial u_part = m;
            u_part.exps[t_] = 0;
            const Scalar e = whole_.counit(u_part) * c;
            if (is_zero(e))
                continue;
            Monomial k_part(carrier()->size());
            k_part.exps[t_] = m.exps[t_];
            auto [it, inserted] = out.try_emplace(k_part, 0);
            it->second += e;
        }
        return Element(carrier(), std::move(out));
    }

    // Pi: u # h -> u eps(h), onto U.
    Element project_Pi(const Element& a) const
    {
        a.same(Element(carrier()));
        Terms out;
        for (const auto& [m, c] : a.terms()) {
            Monomial k_part(carrier()->size());
            k_part.exps[t_] = m.exps[t_];
            const Scalar e = whole_.counit(k_part) * c;
            if (is_zero(e))
                continue;
            Monomial u_part = m;
            u_part.exps[t_] = 0;
            auto [it, inserted] = out.try_emplace(u_part, 0);
            it->second += e;
        }
        return Element(carrier(), std::move(out));
    }

    // (id (x) pi) Delta(a) == a (x) 1
    bool is_coinvariant(const Element& a) const
    {
        const TensorElement d = whole_.coproduct(a);
        TensorElement lhs(carrier(), 2);
        for (const auto& [key, c] : d.terms()) {
            const Element right = project_pi(Element::monomial(carrier(), key[1], c));
            for (const auto& [m, rc] : right.terms())
                lhs.add_term(TensorKey{key[0], m}, rc);
        }
        return lhs == TensorElement::pure({a, Element::one(carrier())});
    }

private:
    HopfStructureMaps whole_;
    HopfStructureMaps u_part_;
    GeneratorIndex t_;
};

// Radford biproduct U # k[<t>] for a primitively generated enveloping-type U:
// t even, t^2 = 1, t g = (-1)^{p(g)} g t; Delta(g) = g (x) 1 + t^{p(g)} (x) g,
// S(g) = -t^{p(g)} g, eps(g) = 0; Delta(t) = t (x) t, S(t) = t, eps(t) = 1.
inline BosonizedAlgebra bosonize(const HopfStructureMaps& u)
{
    const auto& up = u.carrier();
    const std::size_t n = up->size();
    if (u.mode() != ExtensionMode::Super)
        throw InputError("bosonization needs a Hopf superalgebra");
    for (GeneratorIndex i = 0; i < n; ++i) {
        const Element x = Element::generator(up, i);
        const Element one = Element::one(up);
        const bool primitive = u.generator_coproduct(i) == TensorElement::pure({x, one}) + TensorElement::pure({one, x}) &&
                               is_zero(u.generator_counit(i)) && u.generator_antipode(i) == -x;
        if (!primitive)
            throw InputError("bosonization needs a primitively generated algebra; '" + up->generator(i).name +
                             "' is not primitive");
    }
    if (up->find("t"))
        throw InputError("generator name 't' is reserved for the group-like generator");

    PresentationSpec spec;
    spec.mode = ExtensionMode::Ordinary;
    spec.generators = up->spec().generators;
    spec.generators.push_back({"t", 0, 0, 2});
    const GeneratorIndex t = n;
    const std::size_t total = n + 1;
    for (const auto& [key, rhs] : up->spec().swap_rules)
        spec.swap_rules.emplace(key, detail::extend_terms(rhs, total));
    for (const auto& [g, rhs] : up->spec().power_rules)
        spec.power_rules.emplace(g, detail::extend_terms(rhs, total));
    for (GeneratorIndex i = 0; i < n; ++i) {
        Monomial gt(total);
        gt.exps[i] = 1;
        gt.exps[t] = 1;
        spec.swap_rules.emplace(std::make_pair(t, i), Terms{{gt, sign_power(up->generator(i).parity)}});
    }
    spec.power_rules.emplace(t, Terms{{Monomial(total), Scalar(1)}});
    auto p = Presentation::create(std::move(spec));

    const Element one = Element::one(p);
    const Element tt = Element::generator(p, t);
    std::vector<TensorElement> delta;
    std::vector<Scalar> eps;
    std::vector<Element> s;
    for (GeneratorIndex i = 0; i < n; ++i) {
        const Element x = Element::generator(p, i);
        const Element tp = up->generator(i).parity == 1 ? tt : one;
        delta.push_back(TensorElement::pure({x, one}) + TensorElement::pure({tp, x}));
        eps.push_back(0);
        s.push_back(-(tp * x));
    }
    delta.push_back(TensorElement::pure({tt, tt}));
    eps.push_back(1);
    s.push_back(tt);
    HopfStructureMaps whole(p, std::move(delta), std::move(eps), std::move(s), ExtensionMode::Ordinary);
    return BosonizedAlgebra(std::move(whole), u, t);
}

// Applies f to the leg at position `leg` of every pure tensor.
template <class F>
TensorElement apply_to_leg(const TensorElement& x, std::size_t leg, F&& f)
{
    const auto& p = x.presentation();
    TensorElement out(p, x.arity());
    for (const auto& [key, c] : x.terms()) {
        const Element image = f(key[leg]);
        for (const auto& [m, d] : image.terms()) {
            TensorKey k = key;
            k[leg] = m;
            out.add_term(std::move(k), c * d);
        }
    }
    return out;
}

// Replaces leg `leg` by its coproduct: arity grows by one.
inline TensorElement coproduct_on_leg(const HopfStructureMaps& h, const TensorElement& x, std::size_t leg)
{
    const auto& p = x.presentation();
    TensorElement out(p, x.arity() + 1);
    for (const auto& [key, c] : x.terms()) {
        const TensorElement d = h.coproduct(key[leg]);
        for (const auto& [pair, dc] : d.terms()) {
            TensorKey k;
            k.reserve(key.size() + 1);
            k.insert(k.end(), key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
            k.push_back(pair[0]);
            k.push_back(pair[1]);
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(leg + 1), key.end());
            out.add_term(std::move(k), c * dc);
        }
    }
    return out;
}

} // namespace superhopf
