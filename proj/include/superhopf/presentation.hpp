#pragma once

// Finitely presented graded algebras: generator alphabet, PBW monomials and
// the straightening rules that rewrite words into normal form.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linear.hpp"
#include "scalar.hpp"

namespace superhopf {

enum class ExtensionMode { Super, Ordinary };

inline const char* to_string(ExtensionMode mode) { return mode == ExtensionMode::Super ? "super" : "ordinary"; }

struct GeneratorSymbol {
    std::string name;
    int parity = 0;
    std::optional<int> z_degree;
    // A capped generator g has its power rule g^cap -> rhs.
    std::optional<int> exp_cap;
};

// Exponent vector indexed by PBW position.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::size_t n) : exps(n, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    int degree() const
    {
        int d = 0;
        for (int e : exps)
            d += e;
        return d;
    }
    bool is_one() const { return degree() == 0; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Greater-first lexicographic order on exponent vectors; this is both the
// printing order and the pivot order used by row reduction.
using MonomialOrder = std::greater<Monomial>;
using Terms = SparseVector<Monomial, MonomialOrder>;

using GeneratorIndex = std::size_t;
using Word = std::vector<GeneratorIndex>;

struct PresentationSpec {
    std::vector<GeneratorSymbol> generators;
    // (j, i) with j > i: the word g_j g_i rewrites to the rule's terms.
    std::map<std::pair<GeneratorIndex, GeneratorIndex>, Terms> swap_rules;
    // g -> rhs for g^cap.
    std::map<GeneratorIndex, Terms> power_rules;
    ExtensionMode mode = ExtensionMode::Ordinary;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

class Presentation {
public:
    static constexpr std::size_t default_step_budget = 10'000'000;

    // Validates a PresentationSpec: unique names, one rule per descending pair and per
    // capped generator, normal-form right-hand sides, filtration degree never
    // increasing, parity homogeneity.
    static PresentationPtr create(PresentationSpec spec)
    {
        return PresentationPtr(new Presentation(std::move(spec)));
    }

    const PresentationSpec& spec() const { return spec_; }
    std::size_t size() const { return spec_.generators.size(); }
    const GeneratorSymbol& generator(GeneratorIndex i) const { return spec_.generators.at(i); }
    ExtensionMode mode() const { return spec_.mode; }
    int cap(GeneratorIndex i) const { return spec_.generators[i].exp_cap.value_or(0); }

    std::optional<GeneratorIndex> find(std::string_view name) const
    {
        for (GeneratorIndex i = 0; i < size(); ++i)
            if (spec_.generators[i].name == name)
                return i;
        return std::nullopt;
    }

    GeneratorIndex index_of(std::string_view name) const
    {
        if (auto i = find(name))
            return *i;
        throw InputError("unknown generator '" + std::string(name) + "'");
    }

    const Terms& swap_rule(GeneratorIndex j, GeneratorIndex i) const { return spec_.swap_rules.at({j, i}); }
    const Terms& power_rule(GeneratorIndex g) const { return spec_.power_rules.at(g); }

    Monomial one() const { return Monomial(size()); }

    Monomial generator_monomial(GeneratorIndex i) const
    {
        Monomial m(size());
        m.exps.at(i) = 1;
        return m;
    }

    int parity(const Monomial& m) const
    {
        int p = 0;
        for (GeneratorIndex i = 0; i < size(); ++i)
            p += spec_.generators[i].parity * m.exps[i];
        return p % 2;
    }

    std::optional<int> z_degree(const Monomial& m) const
    {
        int z = 0;
        for (GeneratorIndex i = 0; i < size(); ++i) {
            if (m.exps[i] == 0)
                continue;
            if (!spec_.generators[i].z_degree)
                return std::nullopt;
            z += *spec_.generators[i].z_degree * m.exps[i];
        }
        return z;
    }

    bool is_normal(const Monomial& m) const
    {
        if (m.exps.size() != size())
            return false;
        for (GeneratorIndex i = 0; i < size(); ++i) {
            if (m.exps[i] < 0)
                return false;
            if (cap(i) > 0 && m.exps[i] >= cap(i))
                return false;
        }
        return true;
    }

    Word word(const Monomial& m) const
    {
        Word w;
        for (GeneratorIndex i = 0; i < size(); ++i)
            w.insert(w.end(), static_cast<std::size_t>(m.exps[i]), i);
        return w;
    }

    std::string to_string(const Monomial& m) const
    {
        std::string out;
        for (GeneratorIndex i = 0; i < size(); ++i) {
            if (m.exps[i] == 0)
                continue;
            if (!out.empty())
                out += '*';
            out += spec_.generators[i].name;
            if (m.exps[i] > 1)
                out += '^' + std::to_string(m.exps[i]);
        }
        return out.empty() ? "1" : out;
    }

    std::string to_string(const Word& w) const
    {
        std::string out;
        for (GeneratorIndex g : w) {
            if (!out.empty())
                out += '*';
            out += spec_.generators.at(g).name;
        }
        return out.empty() ? "1" : out;
    }

    // Position and length of the leftmost reducible subword, if any.
    std::optional<std::pair<std::size_t, std::size_t>> leftmost_redex(const Word& w) const
    {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const GeneratorIndex g = w[pos];
            if (pos + 1 < w.size() && g > w[pos + 1])
                return std::make_pair(pos, std::size_t{2});
            const int c = cap(g);
            if (c > 0 && pos + static_cast<std::size_t>(c) <= w.size()) {
                bool run = true;
                for (int k = 1; k < c && run; ++k)
                    run = w[pos + static_cast<std::size_t>(k)] == g;
                if (run)
                    return std::make_pair(pos, static_cast<std::size_t>(c));
            }
        }
        return std::nullopt;
    }

    // Right-hand side of the rule whose left-hand side is w[pos, pos+len).
    const Terms& rule_at(const Word& w, std::size_t pos, std::size_t len) const
    {
        if (len == 2 && w[pos] > w[pos + 1])
            return swap_rule(w[pos], w[pos + 1]);
        return power_rule(w[pos]);
    }

    // Replaces w[pos, pos+len) by the rule's right-hand side.
    template <class Sink>
    void expand_rule(const Word& w, std::size_t pos, std::size_t len, const Scalar& c, Sink&& sink) const
    {
        const Terms& rhs = rule_at(w, pos, len);
        for (const auto& [m, rc] : rhs) {
            Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            const Word middle = word(m);
            next.insert(next.end(), middle.begin(), middle.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
            sink(std::move(next), Scalar(c * rc));
        }
    }

    // Leftmost reduction of c*w to PBW normal form.
    Terms reduce(const Word& w, const Scalar& c, std::size_t budget = default_step_budget) const
    {
        for (GeneratorIndex g : w)
            if (g >= size())
                throw InputError("generator index out of range");
        std::map<Word, Scalar> pending;
        if (!is_zero(c))
            pending.emplace(w, c);
        return reduce_all(std::move(pending), budget);
    }

    Terms reduce_all(std::map<Word, Scalar> pending, std::size_t budget = default_step_budget) const
    {
        Terms result;
        std::size_t steps = 0;
        auto push = [&pending](Word next, Scalar coeff) {
            auto [it, inserted] = pending.try_emplace(std::move(next), 0);
            it->second += coeff;
            if (is_zero(it->second))
                pending.erase(it);
        };
        while (!pending.empty()) {
            auto node = pending.extract(pending.begin());
            const Word& current = node.key();
            const auto redex = leftmost_redex(current);
            if (!redex) {
                Monomial m(size());
                for (GeneratorIndex g : current)
                    ++m.exps[g];
                auto [it, inserted] = result.try_emplace(std::move(m), 0);
                it->second += node.mapped();
                if (is_zero(it->second))
                    result.erase(it);
                continue;
            }
            if (++steps > budget)
                throw NonTerminationError("rewrite step budget of " + std::to_string(budget) +
                                          " exceeded while reducing " + to_string(current));
            expand_rule(current, redex->first, redex->second, node.mapped(), push);
        }
        return result;
    }

private:
    explicit Presentation(PresentationSpec spec) : spec_(std::move(spec)) { validate(); }

    void validate() const
    {
        const std::size_t n = size();
        std::set<std::string> names;
        for (const auto& g : spec_.generators) {
            if (g.name.empty())
                throw InvalidStructure("empty generator name");
            if (!names.insert(g.name).second)
                throw InvalidStructure("duplicate generator name '" + g.name + "'");
            if (g.parity != 0 && g.parity != 1)
                throw InvalidStructure("parity of '" + g.name + "' must be 0 or 1");
            if (g.exp_cap && *g.exp_cap < 1)
                throw InvalidStructure("exponent cap of '" + g.name + "' must be positive");
        }
        auto check_rhs = [&](const Terms& rhs, int lhs_degree, int lhs_parity, const std::string& what) {
            for (const auto& [m, c] : rhs) {
                if (!is_normal(m))
                    throw InvalidStructure("right-hand side of " + what + " is not in normal form");
                if (m.degree() > lhs_degree)
                    throw InvalidStructure("right-hand side of " + what + " raises the filtration degree");
                if (parity(m) != lhs_parity)
                    throw InvalidStructure("rule " + what + " is not parity-homogeneous");
                if (is_zero(c))
                    throw InvalidStructure("stored zero coefficient in " + what);
            }
        };
        for (GeneratorIndex j = 0; j < n; ++j) {
            for (GeneratorIndex i = 0; i < j; ++i) {
                auto it = spec_.swap_rules.find({j, i});
                const std::string what = spec_.generators[j].name + "*" + spec_.generators[i].name;
                if (it == spec_.swap_rules.end())
                    throw InvalidStructure("missing straightening rule for " + what);
                check_rhs(it->second, 2, (spec_.generators[i].parity + spec_.generators[j].parity) % 2, what);
            }
        }
        for (const auto& [key, rhs] : spec_.swap_rules)
            if (key.first >= n || key.second >= key.first)
                throw InvalidStructure("straightening rule on a non-descending pair");
        for (GeneratorIndex g = 0; g < n; ++g) {
            const int c = cap(g);
            auto it = spec_.power_rules.find(g);
            if (c == 0) {
                if (it != spec_.power_rules.end())
                    throw InvalidStructure("power rule for uncapped generator '" + spec_.generators[g].name + "'");
                continue;
            }
            const std::string what = spec_.generators[g].name + "^" + std::to_string(c);
            if (it == spec_.power_rules.end())
                throw InvalidStructure("missing power rule for " + what);
            check_rhs(it->second, c, (spec_.generators[g].parity * c) % 2, what);
        }
        for (const auto& [g, rhs] : spec_.power_rules)
            if (g >= n)
                throw InvalidStructure("power rule on unknown generator");
    }

    PresentationSpec spec_;
};

// All normal monomials of filtration degree <= max_degree, ordered by degree
// and then by MonomialOrder.
inline std::vector<Monomial> normal_monomials(const Presentation& p, int max_degree)
{
    std::vector<Monomial> out;
    Monomial m(p.size());
    std::function<void(GeneratorIndex, int)> rec = [&](GeneratorIndex i, int left) {
        if (i == p.size()) {
            out.push_back(m);
            return;
        }
        int top = left;
        if (p.cap(i) > 0)
            top = std::min(top, p.cap(i) - 1);
        for (int e = 0; e <= top; ++e) {
            m.exps[i] = e;
            rec(i + 1, left - e);
        }
        m.exps[i] = 0;
    };
    if (max_degree >= 0)
        rec(0, max_degree);
    std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a > b;
    });
    return out;
}

} // namespace superhopf
