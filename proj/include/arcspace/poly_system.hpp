// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <arcspace/polynomial.hpp>
#include <arcspace/series.hpp>

namespace arcspace
{

// Polynomial in (t, y1..ym): variable 0 is t, variable j is y_j.
using PolyTY = Polynomial;
using PolyMatrix = std::vector<std::vector<PolyTY>>;

template <class R>
using SeriesVec = std::vector<Series<R>>;
using TruncatedVec = SeriesVec<Rational>;

struct PolySystem {
    std::size_t m = 0;
    std::vector<PolyTY> f;

    PolySystem() = default;
    PolySystem(std::size_t nvars, std::vector<PolyTY> equations);

    std::size_t k() const
    {
        return f.size();
    }
    std::string str() const;
    bool operator==(const PolySystem &) const = default;
};

// k columns of the Jacobian, stored 1-based and sorted. The canonical variable
// permutation lists the selected columns first, then the rest in increasing order.
class MinorSelection
{
public:
    MinorSelection() = default;
    MinorSelection(std::vector<int> cols, std::size_t m);

    std::size_t k() const
    {
        return cols_.size();
    }
    std::size_t m() const
    {
        return m_;
    }
    const std::vector<int> &cols() const
    {
        return cols_;
    }
    const std::vector<int> &complement() const
    {
        return rest_;
    }
    std::vector<int> permutation() const;
    bool contains(int col) const;
    std::string str() const;

    // All k-subsets of {1..m} in lexicographic order.
    static std::vector<MinorSelection> all(std::size_t k, std::size_t m);

private:
    std::vector<int> cols_;
    std::vector<int> rest_;
    std::size_t m_ = 0;
};

PolyMatrix jacobian(const PolySystem &sys);
PolyTY determinant(const PolyMatrix &a);
// Transposed cofactor matrix; adjugate(A)*A = det(A)*I.
PolyMatrix adjugate(const PolyMatrix &a);
// The k x k block of the selected Jacobian columns.
PolyMatrix selected_block(const PolySystem &sys, const MinorSelection &sel);
// The k x (m-k) block of the remaining Jacobian columns.
PolyMatrix complement_block(const PolySystem &sys, const MinorSelection &sel);
PolyTY minor_det(const PolySystem &sys, const MinorSelection &sel);
PolyMatrix adjugate_block(const PolySystem &sys, const MinorSelection &sel);
PolyMatrix matmul(const PolyMatrix &a, const PolyMatrix &b);

// p(t, y(t)). The result precision follows the truncated-product rule applied
// to the inputs; no coefficient beyond it is claimed.
template <class R>
Series<R> substitute(const PolyTY &p, const SeriesVec<R> &y)
{
    if (y.empty() || p.nvars() != y.size() + 1) {
        throw ArityMismatch("polynomial in " + std::to_string(p.nvars() == 0 ? 0 : p.nvars() - 1)
                            + " y-variables substituted with " + std::to_string(y.size()) + " series");
    }
    int cap = 0;
    for (const auto &s : y) {
        cap = std::max(cap, s.precision());
    }
    const R one = embed_like(y.front()[0], Rational(1));
    std::vector<Series<R>> vars;
    vars.push_back(Series<R>::monomial(one, 1, cap));
    vars.insert(vars.end(), y.begin(), y.end());

    std::vector<std::vector<Series<R>>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        powers[i].push_back(Series<R>::constant(one, cap));
        for (int e = 1; e <= p.degree_in(i); ++e) {
            powers[i].push_back(e == 1 ? vars[i] : powers[i].back() * vars[i]);
        }
    }
    Series<R> acc = Series<R>::zero(cap, one);
    for (const auto &[mono, c] : p.terms()) {
        std::optional<Series<R>> term;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (mono[i] > 0) {
                const Series<R> &pw = powers[i][static_cast<std::size_t>(mono[i])];
                term = term ? *term * pw : pw;
            }
        }
        const Series<R> t = term ? *term : Series<R>::constant(one, cap);
        acc += t.scaled(embed_like(one, c));
    }
    return acc;
}

template <class R>
SeriesVec<R> substitute(const PolySystem &sys, const SeriesVec<R> &y)
{
    if (y.size() != sys.m) {
        throw ArityMismatch("system in " + std::to_string(sys.m) + " variables evaluated at "
                            + std::to_string(y.size()) + " series");
    }
    SeriesVec<R> out;
    for (const auto &fi : sys.f) {
        out.push_back(substitute(fi, y));
    }
    return out;
}

template <class R>
using SeriesMatrix = std::vector<std::vector<Series<R>>>;

template <class R>
SeriesMatrix<R> substitute(const PolyMatrix &a, const SeriesVec<R> &y)
{
    SeriesMatrix<R> out;
    for (const auto &row : a) {
        std::vector<Series<R>> r;
        for (const auto &e : row) {
            r.push_back(substitute(e, y));
        }
        out.push_back(std::move(r));
    }
    return out;
}

template <class R>
SeriesVec<R> mat_vec(const SeriesMatrix<R> &a, const SeriesVec<R> &x)
{
    SeriesVec<R> out;
    for (const auto &row : a) {
        if (row.size() != x.size()) {
            throw ArityMismatch("matrix-vector size mismatch");
        }
        std::optional<Series<R>> acc;
        for (std::size_t j = 0; j < row.size(); ++j) {
            const Series<R> t = row[j] * x[j];
            acc = acc ? *acc + t : t;
        }
        out.push_back(*acc);
    }
    return out;
}

// Lowest precision among the components.
template <class R>
int min_precision(const SeriesVec<R> &v)
{
    int n = v.empty() ? 0 : v.front().precision();
    for (const auto &s : v) {
        n = std::min(n, s.precision());
    }
    return n;
}

// Smallest order lower bound among the components.
template <class R>
int min_order_bound(const SeriesVec<R> &v)
{
    int n = -1;
    for (const auto &s : v) {
        const int b = s.order().lower_bound();
        n = n < 0 ? b : std::min(n, b);
    }
    return n;
}

template <class R>
bool vec_equal_to_precision(const SeriesVec<R> &a, const SeriesVec<R> &b)
{
    if (a.size() != b.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].equal_to_precision(b[i])) {
            return false;
        }
    }
    return true;
}

std::string to_string(const TruncatedVec &v, bool with_big_o = false);

} // namespace arcspace
