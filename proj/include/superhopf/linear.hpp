#pragma once

// Exact sparse linear algebra over the rationals.
//
// Vectors are ordered maps from an arbitrary key (a monomial, a pair of
// monomials, a basis index) to a nonzero Scalar. The pivot of a row is its
// first key in map order, so elimination is deterministic for a fixed key
// ordering and the resulting bases are bit-reproducible.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace superhopf {

template <class Key, class Compare = std::less<Key>>
using SparseVector = std::map<Key, Scalar, Compare>;

template <class Key, class Compare>
void scale_in_place(SparseVector<Key, Compare>& v, const Scalar& c)
{
    if (is_zero(c)) {
        v.clear();
        return;
    }
    for (auto& entry : v)
        entry.second *= c;
}

// v += c * w, dropping cancelled entries.
template <class Key, class Compare>
void axpy(SparseVector<Key, Compare>& v, const Scalar& c, const SparseVector<Key, Compare>& w)
{
    if (is_zero(c))
        return;
    if (&v == &w) {
        scale_in_place(v, Scalar(1 + c));
        return;
    }
    for (const auto& [key, value] : w) {
        auto [it, inserted] = v.try_emplace(key, 0);
        it->second += c * value;
        if (is_zero(it->second))
            v.erase(it);
    }
}


// Semi-echelon row basis: every row starts at its pivot with coefficient 1
// and pivots are pairwise distinct.
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
public:
    using Vector = SparseVector<Key, Compare>;

    // Remainder of v modulo the span; zero iff v is in the span.
    Vector reduce(Vector v) const
    {
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const Key pivot = it->first;
            const Scalar c = it->second;
            axpy(v, Scalar(-c), row->second);
            it = v.upper_bound(pivot);
        }
        return v;
    }

    bool contains(const Vector& v) const { return reduce(v).empty(); }

    // Adds v to the span; returns false if it was already there.
    bool insert(const Vector& v)
    {
        Vector r = reduce(v);
        if (r.empty())
            return false;
        const Scalar lead = r.begin()->second;
        scale_in_place(r, Scalar(1 / lead));
        const Key pivot = r.begin()->first;
        rows_.emplace(pivot, std::move(r));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    bool has_pivot(const Key& k) const { return rows_.count(k) != 0; }

    // Fully reduced rows (zero at every other pivot), in pivot order.
    std::vector<Vector> rref() const
    {
        std::map<Key, Vector, Compare> done;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
            Vector row = it->second;
            for (const auto& [pivot, reduced] : done) {
                auto hit = row.find(pivot);
                if (hit != row.end()) {
                    const Scalar c = hit->second;
                    axpy(row, Scalar(-c), reduced);
                }
            }
            done.emplace(it->first, std::move(row));
        }
        std::vector<Vector> out;
        out.reserve(done.size());
        for (auto& entry : done)
            out.push_back(std::move(entry.second));
        return out;
    }

private:
    std::map<Key, Vector, Compare> rows_;
};

// Kernel of a linear map given column by column: each call to add_column
// supplies the image of one source vector. Columns whose image reduces to
// zero against earlier columns yield kernel vectors expressed in source keys.
template <class ImageKey, class SourceKey, class ImageCompare = std::less<ImageKey>,
          class SourceCompare = std::less<SourceKey>>
class KernelSolver {
public:
    using Image = SparseVector<ImageKey, ImageCompare>;
    using Source = SparseVector<SourceKey, SourceCompare>;

    void add_column(Image image, Source source)
    {
        auto it = image.begin();
        while (it != image.end()) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) {
                ++it;
                continue;
            }
            const ImageKey pivot = it->first;
            const Scalar c = it->second;
            axpy(image, Scalar(-c), row->second.first);
            axpy(source, Scalar(-c), row->second.second);
            it = image.upper_bound(pivot);
        }
        if (image.empty()) {
            if (!source.empty())
                kernel_.insert(source);
            return;
        }
        const Scalar inv = 1 / Scalar(image.begin()->second);
        scale_in_place(image, inv);
        scale_in_place(source, inv);
        const ImageKey pivot = image.begin()->first;
        rows_.emplace(pivot, std::make_pair(std::move(image), std::move(source)));
    }

    // Row-reduced kernel basis.
    std::vector<Source> kernel() const { return kernel_.rref(); }
    std::size_t nullity() const { return kernel_.rank(); }

private:
    std::map<ImageKey, std::pair<Image, Source>, ImageCompare> rows_;
    EchelonBasis<SourceKey, SourceCompare> kernel_;
};

} // namespace superhopf
