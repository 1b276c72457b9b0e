// SPDX-License-Identifier: Apache-2.0
#include <arcspace/deformation.hpp>

namespace arcspace
{

namespace
{

int min_s_order(const NilSeries &x)
{
    int best = x[0].ring().M + 1;
    for (const auto &c : x.coeffs()) {
        best = std::min(best, c.s_order());
    }
    return best;
}

} // namespace

BasicDivisionResult<NilElement> deform_wdiv(const NilSeries &w, const NilSeries &gval, RemainderConvention conv)
{
    const TruncatedSeries red = nil_reduce(gval);
    const OrderResult ord = red.order();
    if (!ord.is_finite()) {
        throw IndeterminateResidualOrder("reduction of the divisor is zero to precision " + std::to_string(ord.value()));
    }
    const int d = ord.value();
    const bool zcq = conv == RemainderConvention::ZeroConstantQuotient;
    if (zcq && !w[0].is_zero()) {
        throw InvalidArgument("dividend must have zero constant term");
    }
    const NilRing ring = gval[0].ring();
    const NilElement one = NilElement::constant(ring, Rational(1));
    const int top = zcq ? d : d - 1;

    // Normalize to G = gval/u0 = t^d + h with h reducing to zero, u0 the residual unit.
    const NilSeries u0inv = nil_embed(ps_invert_unit(red.shift_down(d)), ring);
    const NilSeries G = gval * u0inv;
    const NilSeries h = G - NilSeries::monomial(one, d, G.precision());
    if (!nil_reduce(h).is_zero_to_precision()) {
        throw InternalInvariant("normalized divisor does not reduce to t^d");
    }

    // (q, r) with x = t^d q + r, r the low part: the inverse of the monomial division map.
    auto split = [&](const NilSeries &x) {
        if (x.precision() < top) {
            throw PrecisionExhausted("division needs precision " + std::to_string(top) + ", have "
                                     + std::to_string(x.precision()));
        }
        NilSeries r = x.low_part(top);
        NilSeries q = (x - r).shift_down(d);
        return std::make_pair(std::move(q), std::move(r));
    };

    // x = sum_k (correction o split^-1)^k w; each round raises the s-order, so at
    // most M+1 rounds contribute.
    NilSeries total = w;
    NilSeries term = w;
    int rounds = 0;
    std::vector<int> sorders;
    while (true) {
        ++rounds;
        const NilSeries next = -(h * split(term).first);
        if (next.is_zero_to_precision()) {
            break;
        }
        if (rounds > ring.M + 1) {
            throw InternalInvariant("geometric division series failed to terminate");
        }
        sorders.push_back(min_s_order(next));
        total += next;
        term = next;
    }
    auto [q, r] = split(total);
    NilSeries a = q * u0inv;
    if (zcq) {
        a = a.with_zero_constant();
        r = r.with_zero_constant();
    }
    // The remainder is an exact polynomial; report it at the dividend's precision.
    r = r.padded(w.precision());
    return BasicDivisionResult<NilElement>{std::move(a), std::move(r), d, rounds, std::move(sorders)};
}

NilSeries exact_divide(const NilSeries &num, const NilSeries &den)
{
    const auto res = deform_wdiv(num, den, RemainderConvention::Standard);
    if (!res.remainder.is_zero_to_precision()) {
        throw DivisibilityFailure("series is not divisible by the deformed divisor");
    }
    return res.quotient;
}

WeierstrassData weierstrass_data(const NilSeries &gval, int D)
{
    const OrderResult ord = nil_reduce(gval).order();
    if (!ord.is_finite()) {
        throw IndeterminateResidualOrder("reduction of the divisor is zero to precision " + std::to_string(ord.value()));
    }
    if (ord.value() != D) {
        throw InvalidArgument("reduction has order " + std::to_string(ord.value()) + ", not " + std::to_string(D));
    }
    const NilRing ring = gval[0].ring();
    const NilElement one = NilElement::constant(ring, Rational(1));
    // t^D = gval*q + r with deg r < D, so h = t^D - r = gval*q.
    const auto res = deform_wdiv(NilSeries::monomial(one, D, gval.precision()), gval, RemainderConvention::Standard);
    std::vector<NilElement> u;
    for (int i = 0; i < D; ++i) {
        const NilElement ui = -res.remainder[i];
        if (!ui.constant_term().is_zero()) {
            throw InternalInvariant("Weierstrass coefficient outside the maximal ideal");
        }
        u.push_back(ui);
    }
    return WeierstrassData{std::move(u), ps_invert_unit(res.quotient), res.rounds};
}

std::vector<NilElement> weierstrass_poly(const NilSeries &gval, int D)
{
    return weierstrass_data(gval, D).u;
}

std::vector<NilElement> polynomial_remainder(const NilSeries &F, const std::vector<NilElement> &u)
{
    const int D = static_cast<int>(u.size());
    std::vector<NilElement> r = F.coeffs();
    for (int k = static_cast<int>(r.size()) - 1; k >= D; --k) {
        const NilElement c = r[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        // t^k = t^{k-D} (h - sum u_i t^i)
        for (int i = 0; i < D; ++i) {
            r[static_cast<std::size_t>(k - D + i)] -= c * u[static_cast<std::size_t>(i)];
        }
        r[static_cast<std::size_t>(k)] = zero_like(c);
    }
    r.resize(static_cast<std::size_t>(D), zero_like(F[0]));
    return r;
}

std::vector<NilElement> membership_relations(const NilSeries &F, const NilSeries &gval, int D)
{
    std::vector<NilElement> out;
    for (const auto &c : polynomial_remainder(F, weierstrass_poly(gval, D))) {
        if (!c.is_zero()) {
            out.push_back(c);
        }
    }
    return out;
}

std::vector<NilElement> deformation_relations(const PolySystem &sys, const NilVec &ytilde)
{
    if (ytilde.size() != sys.m) {
        throw ArityMismatch("deformation has " + std::to_string(ytilde.size()) + " components, system has "
                            + std::to_string(sys.m) + " variables");
    }
    for (const auto &y : ytilde) {
        if (!y[0].is_zero()) {
            throw InvalidArgument("deformed arc components must have zero constant term");
        }
    }
    std::vector<NilElement> out;
    for (const auto &fi : sys.f) {
        const NilSeries v = substitute(fi, ytilde);
        for (const auto &c : v.coeffs()) {
            if (!c.is_zero()) {
                out.push_back(c);
            }
        }
    }
    return out;
}

} // namespace arcspace
