// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace arcspace
{

// GMP-backed rationals, always canonical (lowest terms, positive denominator).
// Expression templates are off so generic code may bind results with auto.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

std::string to_string(const Rational &q);

// Exact square root when q is the square of a rational; the non-negative root is returned.
std::optional<Rational> rational_sqrt(const Rational &q);

// Coefficient-ring hooks, so Series<Rational> works through the same generic code
// as the nilpotent and symbolic coefficient rings.
inline bool is_zero(const Rational &q)
{
    return q.is_zero();
}
inline Rational zero_like(const Rational &)
{
    return Rational(0);
}
inline Rational embed_like(const Rational &, const Rational &q)
{
    return q;
}
inline bool is_unit(const Rational &q)
{
    return !q.is_zero();
}
inline Rational inverse(const Rational &q)
{
    return Rational(1) / q;
}
inline Rational residue(const Rational &q)
{
    return q;
}

} // namespace arcspace
