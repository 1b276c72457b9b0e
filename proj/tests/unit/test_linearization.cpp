// SPDX-License-Identifier: Apache-2.0
#include <arcspace/linearization.hpp>

#include "helpers.hpp"
#include "oracles/oracles.hpp"

using namespace arcspace;
using namespace arcspace::test;

namespace
{

StratumFrame whitney_frame(int d, Gauge gauge = Gauge::Monomial, int N = 20)
{
    return StratumFrame(whitney(), MinorSelection({1}, 3), DivisionWeights::canonical(3, 1), d, gauge, N);
}

TruncatedVec random_z(oracle::Sampler &smp, const StratumFrame &frame, int N)
{
    TruncatedVec z;
    for (std::size_t i = 0; i < frame.m(); ++i) {
        if (i == frame.first_block().front()) {
            z.push_back(TruncatedSeries::monomial(smp.nonzero(), frame.d(), N).with_zero_constant());
        } else {
            z.push_back(smp.poly(1, frame.degree_bound(i), N));
        }
    }
    return z;
}

TruncatedVec random_v(oracle::Sampler &smp, const StratumFrame &frame, int N)
{
    TruncatedVec v;
    for (std::size_t i = 0; i < frame.m(); ++i) {
        v.push_back(smp.poly(frame.degree_bound(i) + 1, N, N, 0.4));
    }
    return v;
}

} // namespace

TEST_CASE("stratum order")
{
    CHECK(stratum_of(V("(t^2, t, t^3)"), whitney(), MinorSelection({1}, 3)) == 2);
    CHECK(stratum_of(V("(t, 0, 0)"), whitney(), MinorSelection({1}, 3)) == 1);
    for (const auto &sel : MinorSelection::all(1, 3)) {
        CHECK_FALSE(stratum_of(V("(0, 0, t)"), umbrella(), sel).has_value());
    }
}

TEST_CASE("weights")
{
    CHECK(DivisionWeights::canonical(3, 1).o() == std::vector<int>{1, 2, 2});
    CHECK(DivisionWeights::canonical(3, 1).is_canonical());
    CHECK_NOTHROW(DivisionWeights({1, 1, 1}, 1));
    CHECK_THROWS_AS(DivisionWeights({2, 1, 1}, 1), InvalidWeights);
    CHECK_THROWS_AS(DivisionWeights({1, -1}, 1), InvalidWeights);
}

TEST_CASE("zero directions map to zero")
{
    const auto frame = whitney_frame(1);
    const auto z = V("(t, t, t)", 20);
    const auto zero = V("(0, 0, 0)", 20);
    for (const auto &s : taylor_p(frame, z, zero)) {
        CHECK(s.is_zero_to_precision());
    }
    for (const auto &s : phi_forward(frame, z, zero)) {
        CHECK(s.is_zero_to_precision());
    }
    for (const auto &s : phi_inverse(frame, z, zero)) {
        CHECK(s.is_zero_to_precision());
    }
    CHECK(vec_equal_to_precision(chi(frame, z, zero), z));
}

TEST_CASE("linear system: phi is multiplication by the divisors")
{
    const PolySystem lin(2, {parse_poly("y1 - y2", 2)});
    const StratumFrame frame(lin, MinorSelection({1}, 2), DivisionWeights::canonical(2, 1), 0, Gauge::Monomial, 12);
    const auto z = V("(0, 0)", 12);
    const auto a = V("(t + t^3, t^2)", 12);
    CHECK(vec_equal_to_precision(phi_forward(frame, z, a), a));
    FixedPointTrace tr;
    CHECK(vec_equal_to_precision(phi_inverse(frame, z, a, &tr), a));
    CHECK(tr.iterations <= 1);
}

TEST_CASE("remainder off the stratum is rejected")
{
    const auto frame = whitney_frame(2);
    CHECK_THROWS_AS(chi(frame, V("(t, t, t)", 20), V("(0, 0, 0)", 20)), NotOnStratum);
    CHECK_THROWS_AS(psi(frame, V("(t, 0, 0)", 20)), NotOnStratum);
}

TEST_CASE("property: linearization identity and round trips in both gauges")
{
    oracle::Sampler smp(41);
    const int N = 20;
    for (Gauge gauge : {Gauge::Monomial, Gauge::Minor}) {
        for (int d = 1; d <= 2; ++d) {
            const auto frame = whitney_frame(d, gauge, N);
            for (int trial = 0; trial < 15; ++trial) {
                const auto z = random_z(smp, frame, N);
                const auto v = random_v(smp, frame, N);
                const auto y = chi(frame, z, v);
                // f(chi(z, v)) = f(z) + J(z) v
                const auto lhs = substitute(frame.sys(), y);
                const auto fz = substitute(frame.sys(), z);
                const auto Jv = mat_vec(substitute(frame.jac(), z), v);
                CHECK((lhs[0] - fz[0] - Jv[0]).is_zero_to_precision());
                CHECK((lhs[0] - fz[0] - Jv[0]).precision() >= N - 4 * d);

                const auto [z2, v2] = chi_inverse(frame, y);
                CHECK(vec_equal_to_precision(z2, z));
                CHECK(vec_equal_to_precision(v2, v));

                TruncatedVec a;
                for (std::size_t i = 0; i < 3; ++i) {
                    a.push_back(smp.poly(1, N, N, 0.3));
                }
                CHECK(vec_equal_to_precision(phi_inverse(frame, z, phi_forward(frame, z, a)), a));
            }
        }
    }
}

TEST_CASE("property: both gauges split an arc the same way")
{
    oracle::Sampler smp(42);
    const int N = 18;
    for (int d = 1; d <= 2; ++d) {
        const auto mono = whitney_frame(d, Gauge::Monomial, N);
        const auto minor = whitney_frame(d, Gauge::Minor, N);
        for (int trial = 0; trial < 10; ++trial) {
            const auto y = chi(mono, random_z(smp, mono, N), random_v(smp, mono, N));
            const auto p = psi(mono, y);
            const auto q = psi(minor, y);
            CHECK(vec_equal_to_precision(p.z, q.z));
            CHECK(vec_equal_to_precision(p.v, q.v));
            CHECK(vec_equal_to_precision(chi(minor, q.z, phi_forward(minor, q.z, q.a)), y));
        }
    }
}
