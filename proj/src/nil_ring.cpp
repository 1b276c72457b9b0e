// SPDX-License-Identifier: Apache-2.0
#include <arcspace/nil_ring.hpp>

#include <numeric>

namespace arcspace
{

std::vector<std::string> NilRing::names() const
{
    std::vector<std::string> v;
    for (int i = 1; i <= p; ++i) {
        v.push_back("s" + std::to_string(i));
    }
    return v;
}

NilElement::NilElement(const NilRing &ring, Polynomial poly) : ring_(ring), poly_(std::move(poly))
{
    if (poly_.nvars() != static_cast<std::size_t>(ring_.p)) {
        throw ArityMismatch("nil element polynomial has the wrong number of parameters");
    }
    poly_ = poly_.truncated_total_degree(ring_.M);
}

NilElement NilElement::constant(const NilRing &ring, const Rational &q)
{
    return NilElement(ring, Polynomial::constant(static_cast<std::size_t>(ring.p), q));
}

NilElement NilElement::param(const NilRing &ring, int i)
{
    if (i < 1 || i > ring.p) {
        throw InvalidArgument("parameter s" + std::to_string(i) + " outside s1..s" + std::to_string(ring.p));
    }
    return NilElement(ring, Polynomial::variable(static_cast<std::size_t>(ring.p), static_cast<std::size_t>(i - 1)));
}

int NilElement::s_order() const
{
    int best = ring_.M + 1;
    for (const auto &[m, c] : poly_.terms()) {
        best = std::min(best, std::accumulate(m.begin(), m.end(), 0));
    }
    return best;
}

void NilElement::check_ring(const NilElement &o) const
{
    if (!(ring_ == o.ring_)) {
        throw ArityMismatch("nil elements from different rings combined");
    }
}

NilElement &NilElement::operator+=(const NilElement &o)
{
    check_ring(o);
    poly_ += o.poly_;
    return *this;
}

NilElement &NilElement::operator-=(const NilElement &o)
{
    check_ring(o);
    poly_ -= o.poly_;
    return *this;
}

NilElement operator*(const NilElement &a, const NilElement &b)
{
    a.check_ring(b);
    const std::size_t n = static_cast<std::size_t>(a.ring_.p);
    Polynomial r(n);
    Monomial mm(n);
    for (const auto &[ma, ca] : a.poly_.terms()) {
        const int da = std::accumulate(ma.begin(), ma.end(), 0);
        for (const auto &[mb, cb] : b.poly_.terms()) {
            if (da + std::accumulate(mb.begin(), mb.end(), 0) > a.ring_.M) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                mm[i] = ma[i] + mb[i];
            }
            r.add_term(mm, ca * cb);
        }
    }
    NilElement out(a.ring_);
    out.poly_ = std::move(r);
    return out;
}

NilElement &NilElement::operator*=(const NilElement &o)
{
    return *this = *this * o;
}

NilElement inverse(const NilElement &x)
{
    const Rational c = x.constant_term();
    if (c.is_zero()) {
        throw NotAUnit("nilpotent element " + x.str() + " is not invertible");
    }
    const Rational cinv = Rational(1) / c;
    // x = c (1 + n) with n nilpotent; 1/(1+n) = sum_{k<=M} (-n)^k
    const NilElement n = (x - NilElement::constant(x.ring(), c)) * cinv;
    NilElement acc = NilElement::constant(x.ring(), Rational(1));
    NilElement pw = acc;
    for (int k = 1; k <= x.ring().M; ++k) {
        pw = pw * (-n);
        acc += pw;
    }
    return acc * cinv;
}

TruncatedSeries nil_reduce(const NilSeries &x)
{
    std::vector<Rational> v;
    v.reserve(x.coeffs().size());
    for (const auto &c : x.coeffs()) {
        v.push_back(c.constant_term());
    }
    return TruncatedSeries(std::move(v), x.precision(), x.zero_constant());
}

NilSeries nil_embed(const TruncatedSeries &x, const NilRing &ring)
{
    std::vector<NilElement> v;
    v.reserve(x.coeffs().size());
    for (const auto &c : x.coeffs()) {
        v.push_back(NilElement::constant(ring, c));
    }
    return NilSeries(std::move(v), x.precision(), x.zero_constant());
}

std::string to_string(const NilSeries &x, bool with_big_o)
{
    std::string out;
    for (int k = 0; k <= x.precision(); ++k) {
        if (x[k].is_zero()) {
            continue;
        }
        const std::string t = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
        if (!out.empty()) {
            out += " + ";
        }
        const bool single = x[k].poly().terms().size() == 1;
        const std::string c = x[k].str();
        if (t.empty()) {
            out += single ? c : "(" + c + ")";
        } else if (c == "1") {
            out += t;
        } else {
            out += (single ? c : "(" + c + ")") + "*" + t;
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (with_big_o) {
        out += " + O(t^" + std::to_string(x.precision() + 1) + ")";
    }
    return out;
}

} // namespace arcspace
