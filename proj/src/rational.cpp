// SPDX-License-Identifier: Apache-2.0
#include <arcspace/rational.hpp>

#include <gmp.h>

namespace arcspace
{

std::string to_string(const Rational &q)
{
    return q.str();
}

std::optional<Rational> rational_sqrt(const Rational &q)
{
    if (q < 0) {
        return std::nullopt;
    }
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (mpz_perfect_square_p(num.backend().data()) == 0 || mpz_perfect_square_p(den.backend().data()) == 0) {
        return std::nullopt;
    }
    return Rational(boost::multiprecision::sqrt(num), boost::multiprecision::sqrt(den));
}

} // namespace arcspace
