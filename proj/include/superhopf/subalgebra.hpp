#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "element.hpp"

namespace superhopf {

using ElementBasis = EchelonBasis<Monomial, MonomialOrder>;

// Subalgebra generated by a list of elements, with degree-bounded bases:
// level n is the span of all products of generators of total weight <= n.
// Weights default to 1; weight-0 generators (e.g. a group-like of finite
// order) are absorbed into every level.
class SpannedSubalgebra {
public:
    static constexpr std::size_t default_dimension_budget = 200'000;

    SpannedSubalgebra(PresentationPtr parent, std::vector<Element> generators, int max_level,
                      std::vector<int> weights = {}, std::size_t dimension_budget = default_dimension_budget)
        : parent_(std::move(parent)), generators_(std::move(generators)), weights_(std::move(weights)),
          budget_(dimension_budget)
    {
        if (max_level < 0)
            throw InputError("subalgebra level must be non-negative");
        if (weights_.empty())
            weights_.assign(generators_.size(), 1);
        if (weights_.size() != generators_.size())
            throw InputError("one weight per generator expected");
        for (const auto& g : generators_)
            g.same(Element(parent_));
        for (int w : weights_)
            if (w != 0 && w != 1)
                throw InputError("generator weights must be 0 or 1");
        build(max_level);
    }

    const PresentationPtr& parent() const { return parent_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::vector<int>& weights() const { return weights_; }
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }

    std::size_t dimension(int level) const { return levels_.at(static_cast<std::size_t>(level)).rank(); }

    // Vectors that first appear at this level (independent modulo level-1).
    const std::vector<Element>& new_vectors(int level) const
    {
        return fresh_.at(static_cast<std::size_t>(level));
    }

    std::vector<Element> basis(int level) const
    {
        std::vector<Element> out;
        for (auto& row : levels_.at(static_cast<std::size_t>(level)).rref())
            out.emplace_back(parent_, std::move(row));
        return out;
    }

    const ElementBasis& echelon(int level) const { return levels_.at(static_cast<std::size_t>(level)); }

    bool contains(const Element& a, int level) const
    {
        a.same(Element(parent_));
        return echelon(level).contains(a.terms());
    }
    bool contains(const Element& a) const { return contains(a, max_level()); }

private:
    void absorb(ElementBasis& basis, std::vector<Element>& fresh, std::vector<Element> frontier)
    {
        // Right multiplication by weight-0 generators until stable.
        while (!frontier.empty()) {
            std::vector<Element> next;
            for (const auto& v : frontier) {
                for (std::size_t g = 0; g < generators_.size(); ++g) {
                    if (weights_[g] != 0)
                        continue;
                    Element prod = v * generators_[g];
                    if (basis.insert(prod.terms())) {
                        fresh.push_back(prod);
                        next.push_back(std::move(prod));
                        if (basis.rank() > budget_)
                            throw BudgetExceeded("subalgebra dimension budget exceeded");
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    void build(int max_level)
    {
        ElementBasis basis;
        std::vector<Element> fresh;
        const Element one = Element::one(parent_);
        basis.insert(one.terms());
        fresh.push_back(one);
        absorb(basis, fresh, {one});
        levels_.push_back(basis);
        fresh_.push_back(fresh);
        for (int level = 1; level <= max_level; ++level) {
            std::vector<Element> added;
            for (const auto& v : fresh_.back()) {
                for (std::size_t g = 0; g < generators_.size(); ++g) {
                    if (weights_[g] != 1)
                        continue;
                    Element prod = v * generators_[g];
                    if (basis.insert(prod.terms())) {
                        added.push_back(std::move(prod));
                        if (basis.rank() > budget_)
                            throw BudgetExceeded("subalgebra dimension budget exceeded");
                    }
                }
            }
            std::vector<Element> all = added;
            absorb(basis, all, added);
            levels_.push_back(basis);
            fresh_.push_back(std::move(all));
        }
    }

    PresentationPtr parent_;
    std::vector<Element> generators_;
    std::vector<int> weights_;
    std::size_t budget_;
    std::vector<ElementBasis> levels_;
    std::vector<std::vector<Element>> fresh_;
};

} // namespace superhopf
