// SPDX-License-Identifier: Apache-2.0
#include <arcspace/lifting.hpp>

#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace arcspace;
using namespace arcspace::test;

namespace
{

// t^shift (1 + t^5)^alpha to precision N
TruncatedSeries binomial_times(const Rational &alpha, int shift, int N)
{
    const auto root = oracle::binomial_series(alpha, Q(1), 5, N - shift);
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Q(0));
    for (int i = shift; i <= N; ++i) {
        c[static_cast<std::size_t>(i)] = root[static_cast<std::size_t>(i - shift)];
    }
    return TruncatedSeries(c, N, true);
}

} // namespace

TEST_CASE("exact solution is returned unchanged")
{
    const auto ybar = V("(t^2, t, t^3)", 20);
    const auto r = newton_lift(whitney(), MinorSelection({1}, 3), ybar, 20);
    CHECK(vec_equal_to_precision(r.y, ybar));
    CHECK(r.report.trace.empty());
    CHECK_FALSE(r.report.e0.is_finite());
    CHECK(r.report.agreement == 21);
}

TEST_CASE("cusp lift")
{
    const int N = 24;
    const auto r = newton_lift(cusp(), MinorSelection({2}, 2), V("(t^2 + t^7, t^3)", N), N);
    CHECK(r.report.e0.value() == 11);
    CHECK(r.report.d == 3);
    CHECK(r.report.agreement >= 8);
    CHECK(r.report.quadratic());
    CHECK(r.y[1].equal_to_precision(binomial_times(Q(3, 2), 3, N)));
    CHECK(r.y[1].precision() == N);
    CHECK(substitute(cusp(), r.y)[0].is_zero_to_precision());
}

TEST_CASE("Whitney lift")
{
    const int N = 24;
    const auto r = newton_lift(whitney(), MinorSelection({1}, 3), V("(t, t, t + t^6)", N), N);
    CHECK(r.report.e0.value() == 7);
    CHECK(r.report.d == 1);
    CHECK(r.report.agreement == 6);
    CHECK(r.y[0].equal_to_precision(binomial_times(Q(1, 2), 1, N)));
}

TEST_CASE("lift errors")
{
    CHECK_THROWS_AS(newton_lift(whitney(), MinorSelection({1}, 3), V("(t + t^3, t, t^2)"), 16),
                    InsufficientApproximation);
    CHECK_THROWS_AS(newton_lift(whitney(), MinorSelection({1}, 3), V("(0, t, t)"), 16), NoMinor);
    CHECK_THROWS_AS(newton_lift(whitney(), MinorSelection({1}, 3), V("(t, t)"), 16), ArityMismatch);
    CHECK_THROWS_AS(newton_lift(whitney(), MinorSelection({1}, 2), V("(t, t, t)"), 16), BadSelection);
}

TEST_CASE("property: Newton equals degree-by-degree solving and agrees past e0 - d")
{
    oracle::Sampler smp(71);
    const int N = 10;
    for (int trial = 0; trial < 10; ++trial) {
        // y1^2 = y2 y3 with y1 = t*u, y2 = t, y3 = t*(u^2 + t^e * noise)
        const auto u = TruncatedSeries::constant(smp.nonzero(), N) + smp.poly(1, 3, N);
        const int e = smp.uniform(2, 5);
        const auto y1 = u.shift_up(1).truncated(N).with_zero_constant();
        const auto y2 = S("t", N);
        const auto y3 = ((u * u).shift_up(1) + TruncatedSeries::monomial(smp.nonzero(), e + 1, N + 1)).truncated(N)
                            .with_zero_constant();
        const TruncatedVec ybar{y1, y2, y3};
        const auto r = newton_lift(whitney(), MinorSelection({1}, 3), ybar, N);
        const int d = r.report.d;
        CHECK(d == 1);
        const auto bf = oracle::brute_force_lift(whitney(), 1, ybar, d, r.report.e0.value() - d, N);
        CHECK(vec_equal_to_precision(r.y, bf));
        CHECK(r.report.agreement >= r.report.e0.value() - d);
        CHECK(r.report.quadratic());
    }
}
