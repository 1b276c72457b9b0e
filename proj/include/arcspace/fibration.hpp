// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include <arcspace/linearization.hpp>

namespace arcspace
{

// Polynomial in the remainder coordinates z_{i,j} (coefficient of t^j in z_i).
using CoeffPolynomial = Polynomial;

struct ZdStarSystem {
    std::size_t m = 0;
    std::size_t k = 0;
    int d = 0;
    // One (i, j) pair per variable, 1-based, in variable order.
    std::vector<std::pair<int, int>> coords;
    std::vector<std::string> names;
    // Coordinates forced to zero by linear stratum conditions (z_{i,j} = 0).
    std::vector<std::pair<int, int>> fixed_zero;
    std::vector<CoeffPolynomial> equations;
    CoeffPolynomial inequation;

    // Equations one per line as "... = 0", then the inequation as "... != 0".
    std::string to_text() const;
    // Lines "z{i}_{j} = 0" for the fixed coordinates.
    std::string fixed_text() const;
    // Whether concrete remainder coefficients satisfy the system.
    bool satisfied_by(const TruncatedVec &z) const;
};

// Is f(z) in the image of the linearized map on the divisor module? Decided by
// the order of adj(z) f(z). The d = 0 frame is the degenerate stratum whose
// remainder space is {0}; there membership means f(t, 0) = 0.
bool zdstar_member(const StratumFrame &frame, const TruncatedVec &z);

// Symbolic equations for hypersurfaces (k = 1) with canonical weights.
ZdStarSystem zdstar_equations(const PolySystem &sys, const MinorSelection &sel, int d);

// v = (-g(z)^{-1} adj(z) f(z), 0), solving f(z) + J(z) v = 0.
TruncatedVec fiber_particular(const StratumFrame &frame, const TruncatedVec &z);

} // namespace arcspace
