// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <arcspace/division.hpp>
#include <arcspace/nil_ring.hpp>
#include <arcspace/poly_system.hpp>

namespace arcspace
{

using NilVec = SeriesVec<NilElement>;

// Division w = gval*a + z over A_S = S[[t]], S the nilpotent test ring, where the
// reduction of gval has order d. Computed by the terminating geometric series in
// the correction operator; the result records its round count.
BasicDivisionResult<NilElement> deform_wdiv(const NilSeries &w, const NilSeries &gval,
                                            RemainderConvention conv = RemainderConvention::ZeroConstantQuotient);

// Exact quotient num/den over A_S; the standard-convention remainder must vanish.
NilSeries exact_divide(const NilSeries &num, const NilSeries &den);

// Coefficients u_0..u_{D-1} of the monic h = t^D + sum u_i t^i with gval = h*unit.
std::vector<NilElement> weierstrass_poly(const NilSeries &gval, int D);

struct WeierstrassData {
    std::vector<NilElement> u;
    // gval = h * unit
    NilSeries unit;
    int rounds = 0;
};
WeierstrassData weierstrass_data(const NilSeries &gval, int D);

// Nonzero remainder coefficients, lowest t-degree first, of the polynomial
// division of F (read as an exact polynomial in t) by the Weierstrass
// polynomial of gval.
std::vector<NilElement> membership_relations(const NilSeries &F, const NilSeries &gval, int D);

// Full remainder (degree < D) of the polynomial division by the monic t^D + sum u_i t^i.
std::vector<NilElement> polynomial_remainder(const NilSeries &F, const std::vector<NilElement> &u);

// Nonzero t-coefficients of each f_i evaluated at the deformed arc.
std::vector<NilElement> deformation_relations(const PolySystem &sys, const NilVec &ytilde);

} // namespace arcspace
