// SPDX-License-Identifier: Apache-2.0
#include <arcspace/division.hpp>

namespace arcspace
{

DivisionResult wdiv(const TruncatedSeries &w, const TruncatedSeries &gval)
{
    return wdiv(w, gval, RemainderConvention::ZeroConstantQuotient);
}

DivisionResult wdiv(const TruncatedSeries &w, const TruncatedSeries &gval, RemainderConvention conv)
{
    const OrderResult ord = gval.order();
    if (!ord.is_finite()) {
        throw IndeterminateOrder("divisor is zero to precision " + std::to_string(ord.value()));
    }
    const int d = ord.value();
    const bool zcq = conv == RemainderConvention::ZeroConstantQuotient;
    if (zcq && !w[0].is_zero()) {
        throw InvalidArgument("dividend must have zero constant term");
    }
    if (w.precision() < d) {
        throw PrecisionExhausted("dividend known to precision " + std::to_string(w.precision())
                                 + " below the divisor order " + std::to_string(d));
    }
    const int top = zcq ? d : d - 1;
    TruncatedSeries z = w.low_part(top);
    z = zcq ? z.with_zero_constant() : z;
    const TruncatedSeries u = gval.shift_down(d);
    TruncatedSeries a = (w - z).shift_down(d) * ps_invert_unit(u);
    if (zcq) {
        a = a.with_zero_constant();
    }
    return DivisionResult{std::move(a), std::move(z), d, 1, {}};
}

VectorDivisionResult wdiv_vector(const TruncatedVec &y, const TruncatedSeries &gval, const std::vector<int> &weights)
{
    if (weights.size() != y.size()) {
        throw ArityMismatch("one weight per component required");
    }
    const OrderResult ord = gval.order();
    if (!ord.is_finite()) {
        throw IndeterminateOrder("divisor is zero to precision " + std::to_string(ord.value()));
    }
    VectorDivisionResult out;
    out.weights = weights;
    out.divisor_order = ord.value();
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (weights[i] < 0) {
            throw InvalidWeights("weights must be non-negative");
        }
        const DivisionResult r = wdiv(y[i], ps_pow(gval, weights[i]));
        out.quotients.push_back(r.quotient);
        out.remainders.push_back(r.remainder);
    }
    return out;
}

TruncatedSeries exact_divide(const TruncatedSeries &num, const TruncatedSeries &den)
{
    const OrderResult ord = den.order();
    if (!ord.is_finite()) {
        throw IndeterminateOrder("divisor is zero to precision " + std::to_string(ord.value()));
    }
    const int d = ord.value();
    return num.shift_down(d) * ps_invert_unit(den.shift_down(d));
}

} // namespace arcspace
