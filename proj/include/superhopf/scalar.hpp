#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace superhopf {

// Exact rational coefficient. mpq_class keeps the value canonical
// (positive denominator, coprime parts) after every arithmetic operation.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1)
{
    if (den == 0)
        throw InputError("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Scalar& c) { return sgn(c) == 0; }

// Prints p or p/q; the sign is part of the numerator.
inline std::string to_string(const Scalar& c) { return c.get_str(); }

inline Scalar parse_scalar(std::string_view text)
{
    Scalar q;
    if (text.empty() || q.set_str(std::string(text), 10) != 0)
        throw InputError("not a rational literal: '" + std::string(text) + "'");
    if (sgn(q.get_den()) == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
}

inline Scalar sign_power(int exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

} // namespace superhopf
