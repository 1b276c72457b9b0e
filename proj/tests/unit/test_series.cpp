// SPDX-License-Identifier: Apache-2.0
#include <random>

#include <arcspace/series.hpp>

#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace arcspace;
using namespace arcspace::test;

TEST_CASE("addition cancels and keeps the smaller precision")
{
    const auto s = S("t + t^2", 8) + S("-t", 8);
    CHECK(s.precision() == 8);
    CHECK(same(s, S("t^2", 8), 8));
    CHECK((S("t", 8) + S("t", 5)).precision() == 5);
}

TEST_CASE("product precision follows the valuation rule")
{
    const auto p = S("1 + t", 10) * S("1 - t", 10);
    CHECK(same(p, S("1 - t^2", 10), 10));
    const auto q = S("t^2", 10) * S("t^3", 10);
    CHECK(q.precision() == 12);
    CHECK(same(q, S("t^5", 12), 12));
    // a known only to t^6 but b = t^3 * unit: the product is known to t^9
    CHECK((S("t + t^2", 6) * S("t^3", 12)).precision() == 9);
}

TEST_CASE("order")
{
    CHECK(S("t^2 + t^3").order().str() == "Finite(2)");
    CHECK(TruncatedSeries::zero(16, Q(0)).order().str() == "ZeroToPrecision(16)");
    CHECK(TruncatedSeries::zero(16, Q(0)).order().lower_bound() == 17);
    CHECK((S("t + t^2") * S("t + t^2")).order().value() == 2);
}

TEST_CASE("unit inverse")
{
    CHECK(same(ps_invert_unit(S("1")), S("1"), 16));
    const auto inv = ps_invert_unit(S("1 + t", 12));
    for (int i = 0; i <= 12; ++i) {
        CHECK(inv[i] == Q(i % 2 == 0 ? 1 : -1));
    }
    CHECK(same(inv * S("1 + t", 12), S("1", 12), 12));
    CHECK_THROWS_AS(ps_invert_unit(S("t + t^2")), NotAUnit);
}

TEST_CASE("square root")
{
    CHECK(same(ps_sqrt(S("1"), Q(1)), S("1"), 16));
    const auto r = ps_sqrt(S("1 + 4*t", 10), Q(1));
    CHECK(same(r, S("1 + 2*t - 2*t^2 + 4*t^3 - 10*t^4 + 28*t^5 - 84*t^6 + 264*t^7 - 858*t^8 + 2860*t^9 - 9724*t^10", 10), 10));
    CHECK(same(r * r, S("1 + 4*t", 10), 10));
    CHECK(ps_sqrt(S("1 + 4*t", 10), Q(-1))[0] == Q(-1));
    CHECK_THROWS_AS(ps_sqrt(S("2 + t"), Q(1)), NotASquare);
    CHECK_THROWS_AS(ps_sqrt(S("t"), Q(0)), NonUnitRadicand);
}

TEST_CASE("shifts")
{
    const auto s = S("t^2 + t^5", 10);
    CHECK(s.shift_down(2).precision() == 8);
    CHECK(same(s.shift_down(2), S("1 + t^3", 8), 8));
    CHECK(s.shift_up(3).precision() == 13);
    CHECK_THROWS_AS(s.shift_down(3), DivisibilityFailure);
}

TEST_CASE("printing")
{
    CHECK(to_string(S("1 - 3/2*t^2 + t^5", 6)) == "1 - 3/2*t^2 + t^5 + O(t^7)");
    CHECK(to_string(S("1 - 3/2*t^2 + t^5", 6), false) == "1 - 3/2*t^2 + t^5");
    CHECK(to_string(TruncatedSeries::zero(3, Q(0))) == "0 + O(t^4)");
}

TEST_CASE("property: ring axioms and inverse on random series")
{
    oracle::Sampler smp(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int N = smp.uniform(1, 12);
        const auto a = smp.poly(0, N, N);
        const auto b = smp.poly(0, N, N);
        const auto c = smp.poly(0, N, N);
        CHECK((a * b).equal_to_precision(b * a));
        CHECK(((a * b) * c).equal_to_precision(a * (b * c)));
        CHECK((a * (b + c)).equal_to_precision(a * b + a * c));
        // dense oracle for the product
        const auto p = a * b;
        const auto want = oracle::dense_mul(oracle::dense(a, N), oracle::dense(b, N), N);
        for (int i = 0; i <= std::min(p.precision(), N); ++i) {
            CHECK(p[i] == want[static_cast<std::size_t>(i)]);
        }
        const auto u = a + TruncatedSeries::constant(smp.nonzero() - a[0], N);
        CHECK((u * ps_invert_unit(u)).equal_to_precision(TruncatedSeries::constant(Q(1), N)));
        CHECK(ps_sqrt(u * u, u[0]).equal_to_precision(u));
    }
}
