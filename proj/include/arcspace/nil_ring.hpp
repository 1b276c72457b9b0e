// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <arcspace/polynomial.hpp>
#include <arcspace/series.hpp>

namespace arcspace
{

// The test ring Q[s1..sp]/m^(M+1), m = (s1..sp): a complete local ring with
// residue field Q in which every element of m is nilpotent.
struct NilRing {
    int p = 0;
    int M = 1;

    NilRing() = default;
    NilRing(int params, int nil_order) : p(params), M(nil_order)
    {
        if (params < 0 || nil_order < 1) {
            throw InvalidArgument("nil ring needs p >= 0 parameters and nilpotency order M >= 1");
        }
    }
    bool operator==(const NilRing &) const = default;
    std::vector<std::string> names() const;
};

class NilElement
{
public:
    explicit NilElement(const NilRing &ring) : ring_(ring), poly_(static_cast<std::size_t>(ring.p)) {}
    NilElement(const NilRing &ring, Polynomial poly);

    static NilElement constant(const NilRing &ring, const Rational &q);
    // The parameter s_i, 1-based.
    static NilElement param(const NilRing &ring, int i);

    const NilRing &ring() const
    {
        return ring_;
    }
    const Polynomial &poly() const
    {
        return poly_;
    }
    bool is_zero() const
    {
        return poly_.is_zero();
    }
    Rational constant_term() const
    {
        return poly_.constant_term();
    }
    // Lowest total degree among the terms; M+1 for zero.
    int s_order() const;

    NilElement operator-() const
    {
        return NilElement(ring_, -poly_);
    }
    NilElement &operator+=(const NilElement &o);
    NilElement &operator-=(const NilElement &o);
    NilElement &operator*=(const NilElement &o);
    friend NilElement operator+(NilElement a, const NilElement &b)
    {
        return a += b;
    }
    friend NilElement operator-(NilElement a, const NilElement &b)
    {
        return a -= b;
    }
    friend NilElement operator*(const NilElement &a, const NilElement &b);
    friend NilElement operator*(NilElement a, const Rational &q)
    {
        a.poly_ *= q;
        return a;
    }
    bool operator==(const NilElement &o) const
    {
        return ring_ == o.ring_ && poly_ == o.poly_;
    }

    std::string str() const
    {
        return poly_.str(ring_.names(), TermOrder::LastVariableLargest);
    }

private:
    void check_ring(const NilElement &o) const;

    NilRing ring_;
    Polynomial poly_;
};

inline bool is_zero(const NilElement &x)
{
    return x.is_zero();
}
inline NilElement zero_like(const NilElement &x)
{
    return NilElement(x.ring());
}
inline NilElement embed_like(const NilElement &x, const Rational &q)
{
    return NilElement::constant(x.ring(), q);
}
inline bool is_unit(const NilElement &x)
{
    return !x.constant_term().is_zero();
}
// c^{-1} * sum_k (-(x - c)/c)^k, a finite sum since x - c is nilpotent.
NilElement inverse(const NilElement &x);
inline Rational residue(const NilElement &x)
{
    return x.constant_term();
}

using NilSeries = Series<NilElement>;

// Reduction modulo the maximal ideal.
TruncatedSeries nil_reduce(const NilSeries &x);
NilSeries nil_embed(const TruncatedSeries &x, const NilRing &ring);
std::string to_string(const NilSeries &x, bool with_big_o = true);

} // namespace arcspace
