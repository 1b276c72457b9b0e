// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <arcspace/parse.hpp>

#include "doctest.h"

namespace arcspace::test
{

inline PolySystem whitney()
{
    return PolySystem(3, {parse_poly("y1^2 - y2*y3", 3)});
}

inline PolySystem cusp()
{
    return PolySystem(2, {parse_poly("y1^3 - y2^2", 2)});
}

inline PolySystem umbrella()
{
    return PolySystem(3, {parse_poly("y1^2 - y2^2*y3", 3)});
}

inline TruncatedSeries S(const std::string &text, int N = 16)
{
    return parse_series(text, N);
}

inline TruncatedVec V(const std::string &text, int N = 16)
{
    return parse_series_vec(text, N);
}

inline Rational Q(long n, long d = 1)
{
    return Rational(n, d);
}

// Equal on the common precision, and that precision is at least `need`.
inline bool same(const TruncatedSeries &a, const TruncatedSeries &b, int need = 0)
{
    return a.equal_to_precision(b) && std::min(a.precision(), b.precision()) >= need;
}

} // namespace arcspace::test
