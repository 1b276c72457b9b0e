// SPDX-License-Identifier: Apache-2.0
// Independent reference computations for tests. Everything here works on plain
// dense coefficient vectors and avoids the library's division, linearization
// and lifting code paths.
#pragma once

#include <random>
#include <vector>

#include <arcspace/fibration.hpp>
#include <arcspace/nil_ring.hpp>
#include <arcspace/poly_system.hpp>

namespace arcspace::oracle
{

// Coefficients 0..N of a series.
using Dense = std::vector<Rational>;

Dense dense(const TruncatedSeries &s, int N);
Dense dense_mul(const Dense &a, const Dense &b, int N);
Dense dense_add(const Dense &a, const Dense &b);
Dense dense_scale(const Dense &a, const Rational &c);
// p(t, y(t)) by expanding every monomial densely.
Dense dense_eval(const PolyTY &p, const std::vector<Dense> &y, int N);

// Generalized binomial coefficient binom(alpha, n).
Rational binomial(const Rational &alpha, int n);
// (1 + c t^k)^alpha to precision N.
Dense binomial_series(const Rational &alpha, const Rational &c, int k, int N);

// Closed form of the inverse trivialization for y1^2 - y2*y3 with minor 2*y1:
// y1 = z1 + t^d (-z1_d + sqrt(Xi)), y2 = z2 + t^{2d} a2, y3 = z3 + t^{2d} a3,
// Xi = z1_d^2 - (z1^2 - z2 z3)/t^{2d} + z2 a3 + z3 a2 + t^{2d} a2 a3.
TruncatedVec whitney_closed_form(const TruncatedVec &z, const TruncatedSeries &a2, const TruncatedSeries &a3, int d,
                                 int N);

// Solves f(y) = 0 for a hypersurface by fixing the coordinates outside column
// `col` and the coefficients of y_col below degree c, then determining
// coefficient j of y_col from the t^{j+d} coefficient of f, one degree at a time.
TruncatedVec brute_force_lift(const PolySystem &sys, int col, const TruncatedVec &ybar, int d, int c, int N);

// The power series u(s3, s4) = (1 - sqrt(1 + 4*sign*s3*s4)) / (2*s4) in the
// ring with four parameters, truncated at total degree M. sign = -1 gives the
// root of u^2 s4 - u + s3 = 0; sign = +1 is the variant with the other sign
// under the root.
NilElement drinfeld_u(int sign, int M);

// True when the monomial-propagation argument shows the system has no solution:
// an equation of the form x^k forces x = 0, and the inequation collapses to 0.
bool certify_empty(const ZdStarSystem &sys);

// Seeded sampling helpers.
class Sampler
{
public:
    explicit Sampler(unsigned seed) : rng_(seed) {}
    std::mt19937 &rng()
    {
        return rng_;
    }
    int uniform(int lo, int hi);
    // Small rational, possibly zero.
    Rational small();
    Rational nonzero();
    // Random exact polynomial sum_{lo<=j<=hi} c_j t^j at precision N; density in [0, 1].
    TruncatedSeries poly(int lo, int hi, int N, double density = 0.6);
    // Random element of the Whitney cone's Z_d* for minor 2*y1.
    TruncatedVec whitney_zdstar(int d, int N);
    // Random element of the cusp's Z_d* for minor -2*y2; needs 3 | d.
    TruncatedVec cusp_zdstar(int d, int N);

private:
    std::mt19937 rng_;
};

} // namespace arcspace::oracle
