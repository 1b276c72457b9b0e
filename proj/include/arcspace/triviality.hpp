// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <arcspace/polynomial.hpp>

namespace arcspace
{

// Brieskorn hypersurface y_1^{c_1} + ... + y_m^{c_m} = 0 and a cutoff on the
// t-degree of the arc coefficients.
struct BrieskornSpec {
    std::vector<int> c;
    int lmax = 0;

    BrieskornSpec(std::vector<int> exponents, int cutoff);
};

// Coordinates of the arc-space coefficients: block i holds the coefficients of
// t^1..t^lmax of the i-th arc component. Blocks are named y, z, w, x, u, v, ...
// and variable j of a block is printed as e.g. "z3".
struct BrieskornRing {
    std::vector<int> c;
    int lmax = 0;

    explicit BrieskornRing(const BrieskornSpec &spec) : c(spec.c), lmax(spec.lmax) {}
    std::size_t nvars() const
    {
        return c.size() * static_cast<std::size_t>(lmax);
    }
    std::size_t index(std::size_t block, int j) const
    {
        return block * static_cast<std::size_t>(lmax) + static_cast<std::size_t>(j - 1);
    }
    std::vector<std::string> names() const;
};

// Sum over blocks i of the monomials prod_j x_{i,j}^{alpha_j} with
// sum alpha_j = c_i and sum j alpha_j = ell, each with coefficient 1.
Polynomial brieskorn_F(const BrieskornSpec &spec, int ell);

struct IndependenceRow {
    int ell = 0;
    std::size_t terms = 0;
    // number of nonzero partial derivatives of F_ell
    std::size_t count = 0;
    std::size_t rank = 0;
    bool independent = false;
    // Monomials of distinct derivatives never coincide.
    bool distinct_monomials = false;
};

struct IndependenceReport {
    std::vector<IndependenceRow> rows;
    bool all_independent() const;
    bool all_distinct() const;
    // Labeled as heuristic: the criterion that turns this evidence into a
    // non-triviality statement is conditional.
    std::string conclusion() const;
};

IndependenceReport derivative_independence(const BrieskornSpec &spec);

} // namespace arcspace
