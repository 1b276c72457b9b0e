// SPDX-License-Identifier: Apache-2.0
#include <arcspace/lifting.hpp>

#include <arcspace/division.hpp>

namespace arcspace
{

namespace
{

OrderResult system_order(const TruncatedVec &fy)
{
    int lowest = -1;
    int prec = min_precision(fy);
    for (const auto &s : fy) {
        const OrderResult o = s.order();
        if (o.is_finite() && (lowest < 0 || o.value() < lowest)) {
            lowest = o.value();
        }
    }
    if (lowest >= 0 && lowest <= prec) {
        return OrderResult::finite(lowest);
    }
    return OrderResult::zero_to_precision(prec);
}

int ceil_log2(int n)
{
    int r = 0;
    while ((1 << r) < n) {
        ++r;
    }
    return r;
}

} // namespace

bool LiftReport::quadratic() const
{
    OrderResult prev = e0;
    for (const auto &st : trace) {
        if (prev.is_finite() && st.order.is_finite() && st.order.value() < 2 * prev.value() - 2 * d) {
            return false;
        }
        prev = st.order;
    }
    return true;
}

LiftResult newton_lift(const PolySystem &sys, const MinorSelection &sel, const TruncatedVec &ybar, int N)
{
    if (ybar.size() != sys.m) {
        throw ArityMismatch("approximate solution has " + std::to_string(ybar.size()) + " components, expected "
                            + std::to_string(sys.m));
    }
    if (sel.k() != sys.k() || sel.m() != sys.m) {
        throw BadSelection("minor selection must pick k = " + std::to_string(sys.k()) + " of " + std::to_string(sys.m)
                           + " columns");
    }
    if (N < 1) {
        throw InvalidArgument("lift precision must be at least 1");
    }
    for (const auto &s : ybar) {
        if (!s[0].is_zero()) {
            throw InvalidArgument("approximate solution must have zero constant terms");
        }
    }
    const PolyTY g = minor_det(sys, sel);
    const PolyMatrix adj = adjugate_block(sys, sel);
    const int cap = ceil_log2(N) + 2;

    // Every correction divides by g(y_n), which costs d coefficients.
    auto at = [](const TruncatedVec &v, int n) {
        TruncatedVec out;
        for (const auto &s : v) {
            out.push_back(s.padded(n).with_zero_constant());
        }
        return out;
    };
    const OrderResult og0 = substitute(g, at(ybar, N)).order();
    if (!og0.is_finite()) {
        throw NoMinor("minor " + sel.str() + " vanishes at the approximation to precision " + std::to_string(N));
    }
    const int d = og0.value();
    const int internal = N + d * (cap + 1);

    LiftReport rep;
    rep.d = d;
    rep.precision = N;
    rep.internal_precision = internal;

    TruncatedVec y = at(ybar, internal);
    TruncatedVec fy = substitute(sys, y);
    rep.e0 = system_order(fy);
    if (rep.e0.is_finite() && rep.e0.value() <= 2 * d) {
        throw InsufficientApproximation("ord f(ybar) = " + std::to_string(rep.e0.value()) + " is not above 2d = "
                                        + std::to_string(2 * d));
    }

    // The remaining correction has order ord f(y) - d, so stop only past N + d.
    const auto &cols = sel.cols();
    for (int n = 1; system_order(fy).lower_bound() <= N + d; ++n) {
        if (n > cap) {
            throw PrecisionExhausted("Newton iteration did not reach precision " + std::to_string(N) + " in "
                                     + std::to_string(cap) + " steps");
        }
        const TruncatedSeries gy = substitute(g, y);
        const TruncatedVec adjf = mat_vec(substitute(adj, y), fy);
        for (std::size_t l = 0; l < cols.size(); ++l) {
            const TruncatedSeries corr = exact_divide(adjf[l], gy);
            auto &yl = y[static_cast<std::size_t>(cols[l] - 1)];
            yl = (yl - corr).with_zero_constant();
        }
        fy = substitute(sys, y);
        rep.trace.push_back(LiftStep{n, system_order(fy)});
    }

    TruncatedVec out;
    for (const auto &s : y) {
        if (s.precision() < N) {
            throw PrecisionExhausted("lifted component known only to precision " + std::to_string(s.precision()));
        }
        out.push_back(s.truncated(N));
    }
    const OrderResult og = substitute(g, out).order();
    if (!og.is_finite() || og.value() != d) {
        throw InternalInvariant("lifted solution left the stratum of the minor");
    }
    rep.agreement = N + 1;
    const TruncatedVec base = at(ybar, N);
    for (std::size_t i = 0; i < out.size(); ++i) {
        rep.agreement = std::min(rep.agreement, (out[i] - base[i]).order().lower_bound());
    }
    return LiftResult{std::move(out), std::move(rep)};
}

} // namespace arcspace
