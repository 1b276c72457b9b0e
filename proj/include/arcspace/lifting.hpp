// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include <arcspace/poly_system.hpp>

namespace arcspace
{

struct LiftStep {
    int iteration = 0;
    OrderResult order = OrderResult::zero_to_precision(0);
};

struct LiftReport {
    // ord f(ybar) and ord g(ybar)
    OrderResult e0 = OrderResult::zero_to_precision(0);
    int d = 0;
    // ord f(y_n) after each correction
    std::vector<LiftStep> trace;
    // Largest c with y = ybar mod t^c, capped at N+1.
    int agreement = 0;
    int precision = 0;
    // Precision spent on divisions by g(y_n).
    int internal_precision = 0;

    // e_{n+1} >= 2 e_n - 2d on every step whose order is finite.
    bool quadratic() const;
};

struct LiftResult {
    TruncatedVec y;
    LiftReport report;
};

// Newton correction y <- y - (adj(y) f(y) / g(y), 0) in the minor columns,
// repeated until ord f(y) > N + d, which fixes y to precision N. ybar is read as an exact
// polynomial vector. Requires ord f(ybar) > 2 ord g(ybar).
LiftResult newton_lift(const PolySystem &sys, const MinorSelection &sel, const TruncatedVec &ybar, int N);

} // namespace arcspace
