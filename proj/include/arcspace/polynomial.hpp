// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <arcspace/error.hpp>
#include <arcspace/rational.hpp>

namespace arcspace
{

using Monomial = std::vector<int>;

// Graded-lexicographic orders. LastVariableLargest ranks x0 < x1 < ... (used for
// t < y1 < ... < ym and s1 < s2 < ...); FirstVariableLargest ranks x0 > x1 > ...
// (used for the remainder coordinates z_{i,j}).
enum class TermOrder { LastVariableLargest, FirstVariableLargest };

bool grlex_less(const Monomial &a, const Monomial &b, TermOrder order);

// Sparse multivariate polynomial over the rationals in a fixed number of variables.
// No zero coefficient is ever stored.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational &c);
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial term(const Monomial &m, const Rational &c);

    std::size_t nvars() const
    {
        return nvars_;
    }
    const std::map<Monomial, Rational> &terms() const
    {
        return terms_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    bool is_constant() const;
    Rational constant_term() const;
    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    // Largest exponent of variable i.
    int degree_in(std::size_t i) const;

    void add_term(const Monomial &m, const Rational &c);

    Polynomial derivative(std::size_t var) const;
    Polynomial truncated_total_degree(int max_degree) const;
    Polynomial with_variable_zero(std::size_t var) const;
    // Replace variable var by the polynomial q (same variable count).
    Polynomial substituted(std::size_t var, const Polynomial &q) const;
    // Collect as a polynomial in variable var: entry e is the coefficient of x_var^e.
    std::vector<Polynomial> coefficients_in(std::size_t var) const;

    // Terms in decreasing order.
    std::vector<std::pair<Monomial, Rational>> sorted_terms(TermOrder order) const;
    std::pair<Monomial, Rational> leading_term(TermOrder order) const;
    // Scaled so that the leading coefficient is 1; the zero polynomial is returned unchanged.
    Polynomial monic(TermOrder order) const;

    std::string str(const std::vector<std::string> &names, TermOrder order) const;

    Polynomial operator-() const;
    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Polynomial &o);
    Polynomial &operator*=(const Rational &c);
    friend Polynomial operator+(Polynomial a, const Polynomial &b)
    {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b)
    {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Rational &c)
    {
        return a *= c;
    }
    friend Polynomial operator*(const Rational &c, Polynomial a)
    {
        return a *= c;
    }
    bool operator==(const Polynomial &o) const
    {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Rational evaluate(const std::vector<Rational> &values) const;

private:
    void check_arity(const Polynomial &o) const;

    std::size_t nvars_ = 0;
    std::map<Monomial, Rational> terms_;
};

// Coefficient-ring hooks (symbolic coefficients for Series<Polynomial>).
inline bool is_zero(const Polynomial &p)
{
    return p.is_zero();
}
inline Polynomial zero_like(const Polynomial &p)
{
    return Polynomial(p.nvars());
}
inline Polynomial embed_like(const Polynomial &p, const Rational &q)
{
    return Polynomial::constant(p.nvars(), q);
}
inline bool is_unit(const Polynomial &p)
{
    return p.is_constant() && !p.is_zero();
}
Polynomial inverse(const Polynomial &p);

// Variable names t, y1..ym for polynomials in (t, y).
std::vector<std::string> ty_names(std::size_t m);

// Exact rank of a rational matrix (row-major, rows of equal length).
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

} // namespace arcspace
