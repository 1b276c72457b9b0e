// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <arcspace/poly_system.hpp>
#include <arcspace/series.hpp>

namespace arcspace
{

// Which normal form the remainder takes when dividing by a divisor of
// (residual) order d.
enum class RemainderConvention {
    // zero-constant quotient, remainder of degree <= d without constant term
    ZeroConstantQuotient,
    // arbitrary quotient, remainder of degree < d
    Standard,
};

template <class R>
struct BasicDivisionResult {
    Series<R> quotient;
    // Exact polynomial; every coefficient above the degree bound is zero.
    Series<R> remainder;
    int divisor_order = 0;
    // Rounds of the geometric series (1 for a classical division) and the
    // s-order of each round's correction term; empty over the rationals.
    int rounds = 1;
    std::vector<int> round_s_orders;
};

using DivisionResult = BasicDivisionResult<Rational>;

// w = gval*a + z with a zero-constant and z of degree <= d = ord(gval).
DivisionResult wdiv(const TruncatedSeries &w, const TruncatedSeries &gval);
// Same split under either remainder convention.
DivisionResult wdiv(const TruncatedSeries &w, const TruncatedSeries &gval, RemainderConvention conv);

struct VectorDivisionResult {
    TruncatedVec quotients;
    TruncatedVec remainders;
    std::vector<int> weights;
    int divisor_order = 0;
};

// Component i is divided by gval^{o_i}; the remainder has degree <= o_i*d.
VectorDivisionResult wdiv_vector(const TruncatedVec &y, const TruncatedSeries &gval, const std::vector<int> &weights);

// Quotient of an exact division num/den over the rationals: den = t^d*unit and
// num must vanish below t^d.
TruncatedSeries exact_divide(const TruncatedSeries &num, const TruncatedSeries &den);

} // namespace arcspace
