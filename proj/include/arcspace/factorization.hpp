// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <type_traits>
#include <utility>

#include <arcspace/fibration.hpp>
#include <arcspace/linearization.hpp>

namespace arcspace
{

// A stratum frame with the weights (1,..,1,2,..,2) that the factorization requires.
class FactorizationChart
{
public:
    FactorizationChart(PolySystem sys, MinorSelection sel, int d, Gauge gauge = Gauge::Monomial, int precision = 32);

    const StratumFrame &frame() const
    {
        return frame_;
    }

private:
    StratumFrame frame_;
};

// A point of Z_d* x (free coordinates): the remainder and the m-k gauge
// coordinates outside the minor columns.
template <class R>
struct BasicFactorPoint {
    SeriesVec<R> z;
    SeriesVec<R> a2;
};
using FactorPoint = BasicFactorPoint<Rational>;

namespace detail
{

// (g(z) D_l)^{-1} (adj(z) J_2(z) D_2 a2)_l for each minor column l.
template <class R>
SeriesVec<R> coupling(const AtRemainder<R> &at, const SeriesVec<R> &a2)
{
    const StratumFrame &frame = at.frame;
    const auto &b1 = frame.first_block();
    const auto &b2 = frame.second_block();
    SeriesVec<R> out;
    if (b2.empty()) {
        for (std::size_t l = 0; l < b1.size(); ++l) {
            out.push_back(at.zero());
        }
        return out;
    }
    SeriesVec<R> w;
    for (std::size_t j = 0; j < b2.size(); ++j) {
        w.push_back(at.divisors[b2[j]] * a2[j]);
    }
    const SeriesVec<R> e = mat_vec(at.adj, mat_vec(substitute(frame.rest_block(), at.z), w));
    for (std::size_t l = 0; l < b1.size(); ++l) {
        Series<R> c = exact_divide(e[l], at.gz * at.divisors[b1[l]]);
        if (!is_zero(c[0])) {
            throw DivisibilityFailure("coupling term has a constant term");
        }
        out.push_back(c.with_zero_constant());
    }
    return out;
}

// The first-block coordinate that the fiber equation forces on solutions:
// -(g(z) D_l)^{-1} (adj(z) f(z))_l.
template <class R>
SeriesVec<R> forced_b1(const AtRemainder<R> &at)
{
    const SeriesVec<R> adjf = mat_vec(at.adj, at.fz);
    const auto &b1 = at.frame.first_block();
    SeriesVec<R> out;
    for (std::size_t l = 0; l < b1.size(); ++l) {
        const Series<R> c = [&] {
            try {
                return -exact_divide(adjf[l], at.gz * at.divisors[b1[l]]);
            } catch (const DivisibilityFailure &) {
                throw NotInZdStar("adj(z) f(z) is not divisible by g(z) times the gauge divisor");
            }
        }();
        if (!is_zero(c[0])) {
            throw NotInZdStar("forced coordinate has a constant term");
        }
        out.push_back(c.with_zero_constant());
    }
    return out;
}

template <class R>
void check_factor_point(const StratumFrame &frame, const BasicFactorPoint<R> &p)
{
    check_arc(frame, p.z, "remainder");
    if (p.a2.size() != frame.m() - frame.k()) {
        throw ArityMismatch("free coordinates must have m-k components");
    }
    for (const auto &s : p.a2) {
        if (!is_zero(s[0])) {
            throw InvalidArgument("free coordinates must have zero constant term");
        }
    }
}

} // namespace detail

// (a1, a2) -> (b1, a2) with b1 = a1 + (g D_1)^{-1} adj J_2 D_2 a2.
template <class R>
std::pair<SeriesVec<R>, SeriesVec<R>> lambda_map(const FactorizationChart &chart, const SeriesVec<R> &z,
                                                 const SeriesVec<R> &a)
{
    const StratumFrame &frame = chart.frame();
    check_remainder(frame, z);
    detail::check_arc(frame, a, "gauge coordinate vector");
    const detail::AtRemainder<R> at(frame, at_frame_precision(frame, z));
    SeriesVec<R> a2;
    for (std::size_t j : frame.second_block()) {
        a2.push_back(a[j]);
    }
    const SeriesVec<R> c = detail::coupling(at, a2);
    SeriesVec<R> b1;
    const auto &blk = frame.first_block();
    for (std::size_t l = 0; l < blk.size(); ++l) {
        b1.push_back((a[blk[l]] + c[l]).with_zero_constant());
    }
    return {std::move(b1), std::move(a2)};
}

template <class R>
SeriesVec<R> lambda_inverse(const FactorizationChart &chart, const SeriesVec<R> &z, const SeriesVec<R> &b1,
                            const SeriesVec<R> &a2)
{
    const StratumFrame &frame = chart.frame();
    check_remainder(frame, z);
    if (b1.size() != frame.k() || a2.size() != frame.m() - frame.k()) {
        throw ArityMismatch("lambda coordinates have the wrong block sizes");
    }
    const detail::AtRemainder<R> at(frame, at_frame_precision(frame, z));
    const SeriesVec<R> c = detail::coupling(at, a2);
    SeriesVec<R> a(frame.m(), at.zero());
    const auto &blk1 = frame.first_block();
    const auto &blk2 = frame.second_block();
    for (std::size_t l = 0; l < blk1.size(); ++l) {
        a[blk1[l]] = (b1[l] - c[l]).with_zero_constant();
    }
    for (std::size_t j = 0; j < blk2.size(); ++j) {
        a[blk2[j]] = a2[j];
    }
    return a;
}

// Solutions on the stratum -> (z, a2). The dropped first-block coordinate is
// checked against the value the fiber equation forces.
template <class R>
BasicFactorPoint<R> phi_big(const FactorizationChart &chart, const SeriesVec<R> &y)
{
    const StratumFrame &frame = chart.frame();
    for (const auto &fy : substitute(frame.sys(), y)) {
        if (!fy.is_zero_to_precision()) {
            throw NotASolution("f(y) has order " + fy.order().str());
        }
    }
    const StratumPoint<R> pt = psi(frame, y);
    const detail::AtRemainder<R> at(frame, pt.z);
    const SeriesVec<R> p = at.taylor_p(pt.a);
    SeriesVec<R> ap;
    for (std::size_t i = 0; i < pt.a.size(); ++i) {
        ap.push_back((pt.a[i] + p[i]).with_zero_constant());
    }
    auto [b1, a2] = lambda_map(chart, pt.z, ap);
    const SeriesVec<R> forced = detail::forced_b1(at);
    if (!vec_equal_to_precision(b1, forced)) {
        throw InternalInvariant("first-block coordinate differs from the forced fiber value");
    }
    if constexpr (std::is_same_v<R, Rational>) {
        if (!zdstar_member(frame, pt.z)) {
            throw InternalInvariant("remainder of a solution fails the membership test");
        }
    }
    return BasicFactorPoint<R>{pt.z, std::move(a2)};
}

// (z, a2) -> the solution y = z + D(z) phi^{-1}(D(z) lambda^{-1}(forced b1, a2)).
template <class R>
SeriesVec<R> phi_big_inverse(const FactorizationChart &chart, const BasicFactorPoint<R> &pt)
{
    const StratumFrame &frame = chart.frame();
    detail::check_factor_point(frame, pt);
    if constexpr (std::is_same_v<R, Rational>) {
        if (!zdstar_member(frame, pt.z)) {
            throw NotInZdStar("remainder fails the membership test");
        }
    } else {
        check_remainder(frame, pt.z);
    }
    const detail::AtRemainder<R> at(frame, at_frame_precision(frame, pt.z));
    const SeriesVec<R> b1 = detail::forced_b1(at);
    const SeriesVec<R> ap = lambda_inverse(chart, at.z, b1, pt.a2);
    const SeriesVec<R> a = at.phi_inverse(at.times_divisors(ap), nullptr);
    const SeriesVec<R> v = at.times_divisors(a);
    SeriesVec<R> y;
    for (std::size_t i = 0; i < v.size(); ++i) {
        y.push_back((at.z[i] + v[i]).with_zero_constant());
    }
    return y;
}

} // namespace arcspace
