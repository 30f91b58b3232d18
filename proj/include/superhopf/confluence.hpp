#pragma once

// Overlap (critical pair) resolution for the straightening rules. Local
// confluence of every overlap, together with termination, means the normal
// monomials form a linear basis.

#include <cstddef>
#include <string>
#include <vector>

#include "element.hpp"

namespace superhopf {

struct OverlapDiscrepancy {
    std::string word;
    std::string left_first;
    std::string right_first;
};

struct ConfluenceReport {
    std::size_t overlaps_checked = 0;
    std::vector<OverlapDiscrepancy> discrepancies;

    bool confluent() const { return discrepancies.empty(); }
};

namespace detail {

inline std::vector<Word> rule_left_sides(const Presentation& p)
{
    std::vector<Word> lhs;
    for (const auto& [key, rhs] : p.spec().swap_rules)
        lhs.push_back(Word{key.first, key.second});
    for (const auto& [g, rhs] : p.spec().power_rules)
        lhs.push_back(Word(static_cast<std::size_t>(p.cap(g)), g));
    return lhs;
}

inline Terms reduce_after(const Presentation& p, const Word& w, std::size_t pos, std::size_t len)
{
    std::map<Word, Scalar> pending;
    p.expand_rule(w, pos, len, Scalar(1), [&](Word next, Scalar c) {
        auto [it, inserted] = pending.try_emplace(std::move(next), 0);
        it->second += c;
        if (is_zero(it->second))
            pending.erase(it);
    });
    return p.reduce_all(std::move(pending));
}

} // namespace detail

// For every pair of rule left-hand sides overlapping in a proper suffix /
// prefix, reduces the overlap word starting from either rule and compares the
// normal forms. Overlap words longer than degree_bound are skipped.
inline ConfluenceReport check_overlaps(const PresentationPtr& p, int degree_bound)
{
    ConfluenceReport report;
    const auto lhs = detail::rule_left_sides(*p);
    for (const Word& a : lhs) {
        for (const Word& b : lhs) {
            const std::size_t max_overlap = std::min(a.size(), b.size()) - 1;
            for (std::size_t k = 1; k <= max_overlap; ++k) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(k), a.end(), b.begin()))
                    continue;
                Word w = a;
                w.insert(w.end(), b.begin() + static_cast<std::ptrdiff_t>(k), b.end());
                if (static_cast<int>(w.size()) > degree_bound)
                    continue;
                ++report.overlaps_checked;
                const Terms left = detail::reduce_after(*p, w, 0, a.size());
                const Terms right = detail::reduce_after(*p, w, a.size() - k, b.size());
                if (left != right) {
                    report.discrepancies.push_back({p->to_string(w), to_string(Element(p, left)),
                                                    to_string(Element(p, right))});
                }
            }
        }
    }
    return report;
}

} // namespace superhopf
