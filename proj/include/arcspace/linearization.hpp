// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include <arcspace/deformation.hpp>
#include <arcspace/division.hpp>
#include <arcspace/poly_system.hpp>

namespace arcspace
{

// Weights o_1..o_m of the division module, listed in the canonical variable
// order (selected minor columns first). Valid weights satisfy
// o_i + o_j >= o_l + 1 for every pair i, j and every l among the first k.
class DivisionWeights
{
public:
    DivisionWeights(std::vector<int> o, std::size_t k);
    // k ones followed by twos
    static DivisionWeights canonical(std::size_t m, std::size_t k);

    const std::vector<int> &o() const
    {
        return o_;
    }
    std::size_t k() const
    {
        return k_;
    }
    bool is_canonical() const;

private:
    std::vector<int> o_;
    std::size_t k_;
};

enum class Gauge {
    Monomial, // divisor t^{o_i d}
    Minor,    // divisor g(z)^{o_i}
};

std::string to_string(Gauge g);

// Everything fixed along one stratum: the system, the minor g, the weights, the
// order d of g, the gauge and the working precision used to materialize the
// polynomial remainders.
class StratumFrame
{
public:
    StratumFrame(PolySystem sys, MinorSelection sel, DivisionWeights weights, int d, Gauge gauge = Gauge::Monomial,
                 int precision = 32);

    const PolySystem &sys() const
    {
        return sys_;
    }
    const MinorSelection &sel() const
    {
        return sel_;
    }
    const DivisionWeights &weights() const
    {
        return weights_;
    }
    int d() const
    {
        return d_;
    }
    Gauge gauge() const
    {
        return gauge_;
    }
    int precision() const
    {
        return precision_;
    }
    std::size_t m() const
    {
        return sys_.m;
    }
    std::size_t k() const
    {
        return sys_.k();
    }
    // Weight and remainder degree bound of the 0-based component index i.
    int weight(std::size_t i) const
    {
        return var_weight_[i];
    }
    int degree_bound(std::size_t i) const
    {
        return var_weight_[i] * d_;
    }
    // 0-based component indices of the selected columns and of the rest.
    const std::vector<std::size_t> &first_block() const
    {
        return block1_;
    }
    const std::vector<std::size_t> &second_block() const
    {
        return block2_;
    }
    const PolyTY &minor() const
    {
        return minor_;
    }
    const PolyMatrix &jac() const
    {
        return jac_;
    }
    const PolyMatrix &adj() const
    {
        return adj_;
    }
    // Jacobian columns outside the minor, k x (m-k).
    const PolyMatrix &rest_block() const
    {
        return rest_;
    }

private:
    PolySystem sys_;
    MinorSelection sel_;
    DivisionWeights weights_;
    int d_;
    Gauge gauge_;
    int precision_;
    std::vector<int> var_weight_;
    std::vector<std::size_t> block1_, block2_;
    PolyTY minor_;
    PolyMatrix jac_, adj_, rest_;
};

// Order of g(y) for the selected minor; nullopt when g(y) is zero to precision.
std::optional<int> stratum_of(const TruncatedVec &y, const PolySystem &sys, const MinorSelection &sel);

template <class R>
struct StratumPoint {
    SeriesVec<R> z;
    SeriesVec<R> v;
    SeriesVec<R> a;
};

// Fixed-point trace of phi_inverse: agreement order of successive iterates.
struct FixedPointTrace {
    std::vector<int> agreement;
    int iterations = 0;
};

namespace detail
{

inline TruncatedSeries remainder_by(const TruncatedSeries &y, const TruncatedSeries &divisor)
{
    return wdiv(y, divisor).remainder;
}
inline NilSeries remainder_by(const NilSeries &y, const NilSeries &divisor)
{
    return deform_wdiv(y, divisor).remainder;
}

// Order of the image in the residue field.
template <class R>
OrderResult residual_order(const Series<R> &s)
{
    for (int i = 0; i <= s.precision(); ++i) {
        if (!residue(s[i]).is_zero()) {
            return OrderResult::finite(i);
        }
    }
    return OrderResult::zero_to_precision(s.precision());
}

template <class R>
R one_of(const SeriesVec<R> &v)
{
    return embed_like(v.front()[0], Rational(1));
}

// The data of the frame evaluated at a fixed remainder z, reused across
// fixed-point iterations.
template <class R>
struct AtRemainder {
    const StratumFrame &frame;
    SeriesVec<R> z;
    Series<R> gz;
    SeriesMatrix<R> jac, adj;
    SeriesVec<R> divisors;
    SeriesVec<R> fz;

    AtRemainder(const StratumFrame &fr, const SeriesVec<R> &zz)
        : frame(fr), z(zz), gz(substitute(fr.minor(), zz)), jac(substitute(fr.jac(), zz)),
          adj(substitute(fr.adj(), zz)), fz(substitute(fr.sys(), zz))
    {
        const R one = one_of(z);
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (fr.gauge() == Gauge::Monomial) {
                divisors.push_back(Series<R>::monomial(one, fr.degree_bound(i), fr.precision()));
            } else {
                divisors.push_back(ps_pow(gz, fr.weight(i)));
            }
        }
    }

    Series<R> zero() const
    {
        return Series<R>::zero(frame.precision(), z.front()[0]);
    }

    SeriesVec<R> times_divisors(const SeriesVec<R> &a) const
    {
        SeriesVec<R> out;
        for (std::size_t i = 0; i < a.size(); ++i) {
            out.push_back((divisors[i] * a[i]).with_zero_constant());
        }
        return out;
    }

    SeriesVec<R> over_divisors(const SeriesVec<R> &v) const
    {
        SeriesVec<R> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Series<R> q = exact_divide(v[i], divisors[i]);
            if (!is_zero(q[0])) {
                throw NotOnStratum("component " + std::to_string(i + 1) + " is not in the divisor module");
            }
            out.push_back(q.with_zero_constant());
        }
        return out;
    }

    // p = (p1, 0) with p1_l = (adj(z) q)_l / (g(z) D_l),
    // q = f(z + Da) - f(z) - J(z) Da.
    SeriesVec<R> taylor_p(const SeriesVec<R> &a) const
    {
        const SeriesVec<R> v = times_divisors(a);
        SeriesVec<R> zv;
        for (std::size_t i = 0; i < z.size(); ++i) {
            zv.push_back(z[i] + v[i]);
        }
        const SeriesVec<R> fzv = substitute(frame.sys(), zv);
        const SeriesVec<R> lin = mat_vec(jac, v);
        SeriesVec<R> q;
        for (std::size_t r = 0; r < fzv.size(); ++r) {
            q.push_back(fzv[r] - fz[r] - lin[r]);
        }
        const SeriesVec<R> adjq = mat_vec(adj, q);
        SeriesVec<R> p(z.size(), zero());
        const auto &b1 = frame.first_block();
        for (std::size_t l = 0; l < b1.size(); ++l) {
            Series<R> pl = exact_divide(adjq[l], gz * divisors[b1[l]]);
            if (!is_zero(pl[0])) {
                throw DivisibilityFailure("Taylor correction has a constant term");
            }
            p[b1[l]] = pl.with_zero_constant();
        }
        return p;
    }

    SeriesVec<R> phi_forward(const SeriesVec<R> &a) const
    {
        const SeriesVec<R> p = taylor_p(a);
        SeriesVec<R> s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s.push_back(a[i] + p[i]);
        }
        return times_divisors(s);
    }

    SeriesVec<R> phi_inverse(const SeriesVec<R> &vprime, FixedPointTrace *trace) const
    {
        const SeriesVec<R> b = over_divisors(vprime);
        const int cap = min_precision(b) + 2;
        SeriesVec<R> a = b;
        for (int it = 1; it <= cap; ++it) {
            const SeriesVec<R> p = taylor_p(a);
            SeriesVec<R> next;
            for (std::size_t i = 0; i < b.size(); ++i) {
                next.push_back((b[i] - p[i]).with_zero_constant());
            }
            SeriesVec<R> diff;
            for (std::size_t i = 0; i < b.size(); ++i) {
                diff.push_back(next[i] - a[i]);
            }
            const int agree = min_order_bound(diff);
            if (trace != nullptr) {
                trace->agreement.push_back(agree);
                trace->iterations = it;
            }
            const bool done = agree > min_precision(diff);
            a = std::move(next);
            if (done) {
                return a;
            }
        }
        throw PrecisionExhausted("fixed-point iteration did not settle within " + std::to_string(cap) + " steps");
    }
};

template <class R>
void check_arc(const StratumFrame &frame, const SeriesVec<R> &y, const char *what)
{
    if (y.size() != frame.m()) {
        throw ArityMismatch(std::string(what) + " has " + std::to_string(y.size()) + " components, expected "
                            + std::to_string(frame.m()));
    }
    for (const auto &s : y) {
        if (!is_zero(s[0])) {
            throw InvalidArgument(std::string(what) + " components must have zero constant term");
        }
    }
}

} // namespace detail

// z is a polynomial remainder within the degree bounds with ord g(z) = d.
template <class R>
void check_remainder(const StratumFrame &frame, const SeriesVec<R> &z)
{
    detail::check_arc(frame, z, "remainder");
    for (std::size_t i = 0; i < z.size(); ++i) {
        const auto deg = z[i].degree();
        if (deg && *deg > frame.degree_bound(i)) {
            throw NotOnStratum("remainder component " + std::to_string(i + 1) + " has degree " + std::to_string(*deg)
                               + " above the bound " + std::to_string(frame.degree_bound(i)));
        }
    }
    const OrderResult og = detail::residual_order(substitute(frame.minor(), z));
    if (!og.is_finite() || og.value() != frame.d()) {
        throw NotOnStratum("minor at the remainder has order " + og.str() + ", stratum needs "
                           + std::to_string(frame.d()));
    }
}

// Materialize a remainder at the frame's working precision.
template <class R>
SeriesVec<R> at_frame_precision(const StratumFrame &frame, const SeriesVec<R> &z)
{
    SeriesVec<R> out;
    for (const auto &s : z) {
        out.push_back(s.padded(frame.precision()).with_zero_constant());
    }
    return out;
}

template <class R>
SeriesVec<R> taylor_p(const StratumFrame &frame, const SeriesVec<R> &z, const SeriesVec<R> &a)
{
    check_remainder(frame, z);
    detail::check_arc(frame, a, "gauge coordinate vector");
    return detail::AtRemainder<R>(frame, at_frame_precision(frame, z)).taylor_p(a);
}

template <class R>
SeriesVec<R> phi_forward(const StratumFrame &frame, const SeriesVec<R> &z, const SeriesVec<R> &a)
{
    check_remainder(frame, z);
    detail::check_arc(frame, a, "gauge coordinate vector");
    return detail::AtRemainder<R>(frame, at_frame_precision(frame, z)).phi_forward(a);
}

template <class R>
SeriesVec<R> phi_inverse(const StratumFrame &frame, const SeriesVec<R> &z, const SeriesVec<R> &vprime,
                         FixedPointTrace *trace = nullptr)
{
    check_remainder(frame, z);
    detail::check_arc(frame, vprime, "divisor-module vector");
    return detail::AtRemainder<R>(frame, at_frame_precision(frame, z)).phi_inverse(vprime, trace);
}

// y = z + D(z) a with a the phi-inverse coordinates of v.
template <class R>
SeriesVec<R> chi(const StratumFrame &frame, const SeriesVec<R> &z, const SeriesVec<R> &v)
{
    check_remainder(frame, z);
    detail::check_arc(frame, v, "divisor-module vector");
    const detail::AtRemainder<R> at(frame, at_frame_precision(frame, z));
    const SeriesVec<R> dz = at.times_divisors(at.phi_inverse(v, nullptr));
    SeriesVec<R> y;
    for (std::size_t i = 0; i < v.size(); ++i) {
        y.push_back((at.z[i] + dz[i]).with_zero_constant());
    }
    return y;
}

// The division split y = z + v = z + D(z) a, checking that y and z lie on the stratum.
template <class R>
StratumPoint<R> psi(const StratumFrame &frame, const SeriesVec<R> &y)
{
    detail::check_arc(frame, y, "arc");
    const Series<R> gy = substitute(frame.minor(), y);
    const OrderResult og = detail::residual_order(gy);
    if (!og.is_finite() || og.value() != frame.d()) {
        throw NotOnStratum("minor at the arc has order " + og.str() + ", stratum needs " + std::to_string(frame.d()));
    }
    const R one = detail::one_of(y);
    SeriesVec<R> z;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const Series<R> divisor = frame.gauge() == Gauge::Monomial
                                      ? Series<R>::monomial(one, frame.degree_bound(i), frame.precision())
                                      : ps_pow(gy, frame.weight(i));
        z.push_back(detail::remainder_by(y[i], divisor));
    }
    z = at_frame_precision(frame, z);
    check_remainder(frame, z);
    const detail::AtRemainder<R> at(frame, z);
    SeriesVec<R> v;
    for (std::size_t i = 0; i < y.size(); ++i) {
        v.push_back((y[i] - z[i]).with_zero_constant());
    }
    SeriesVec<R> a = at.over_divisors(v);
    return StratumPoint<R>{std::move(z), std::move(v), std::move(a)};
}

// (z, v') with v' = D(z)(a + p(z, a)).
template <class R>
std::pair<SeriesVec<R>, SeriesVec<R>> chi_inverse(const StratumFrame &frame, const SeriesVec<R> &y)
{
    const StratumPoint<R> pt = psi(frame, y);
    const detail::AtRemainder<R> at(frame, pt.z);
    return {pt.z, at.phi_forward(pt.a)};
}

} // namespace arcspace
