// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <arcspace/error.hpp>
#include <arcspace/rational.hpp>

namespace arcspace
{

// Either the exact t-order of a series, or the statement that every stored
// coefficient (indices 0..N) vanishes. The two are never conflated: a
// zero-to-precision value is not "order infinity".
class OrderResult
{
public:
    static OrderResult finite(int j)
    {
        return OrderResult(true, j);
    }
    static OrderResult zero_to_precision(int n)
    {
        return OrderResult(false, n);
    }
    bool is_finite() const
    {
        return finite_;
    }
    // The exponent j for Finite(j), the precision N for ZeroToPrecision(N).
    int value() const
    {
        return value_;
    }
    // A guaranteed lower bound for the true order.
    int lower_bound() const
    {
        return finite_ ? value_ : value_ + 1;
    }
    bool operator==(const OrderResult &o) const = default;
    std::string str() const
    {
        return finite_ ? "Finite(" + std::to_string(value_) + ")" : "ZeroToPrecision(" + std::to_string(value_) + ")";
    }

private:
    OrderResult(bool f, int v) : finite_(f), value_(v) {}
    bool finite_;
    int value_;
};

// Truncated power series sum_{i<=N} c_i t^i over a commutative coefficient ring R.
// Coefficients 0..N are exactly known; nothing is claimed beyond N.
//
// The ring R is reached through the free functions is_zero, zero_like and
// embed_like (and is_unit / inverse for unit inversion); Rational, NilElement
// and Polynomial provide them.
template <class R>
class Series
{
public:
    using coeff_type = R;

    Series(std::vector<R> coeffs, int precision, bool zero_constant = false)
        : c_(std::move(coeffs)), prec_(precision), zc_(zero_constant)
    {
        if (prec_ < 0) {
            throw InvalidArgument("series precision must be non-negative");
        }
        if (c_.empty()) {
            throw InvalidArgument("series needs at least one coefficient to fix its ring");
        }
        const R z = zero_like(c_.front());
        c_.resize(static_cast<std::size_t>(prec_) + 1, z);
        if (zc_ && !is_zero(c_[0])) {
            throw InvalidArgument("zero-constant series with nonzero constant term");
        }
    }

    static Series zero(int precision, const R &proto)
    {
        return Series(std::vector<R>{zero_like(proto)}, precision, true);
    }
    static Series constant(const R &c, int precision)
    {
        return Series(std::vector<R>{c}, precision, false);
    }
    static Series monomial(const R &c, int exponent, int precision)
    {
        std::vector<R> v(static_cast<std::size_t>(std::max(exponent, 0)) + 1, zero_like(c));
        if (exponent <= precision) {
            v[static_cast<std::size_t>(exponent)] = c;
        }
        return Series(std::move(v), precision, exponent > 0);
    }

    int precision() const
    {
        return prec_;
    }
    bool zero_constant() const
    {
        return zc_;
    }
    const std::vector<R> &coeffs() const
    {
        return c_;
    }
    const R &operator[](int i) const
    {
        assert(i >= 0 && i <= prec_);
        return c_[static_cast<std::size_t>(i)];
    }
    // Coefficient lookup that answers zero above the precision; only for
    // callers that know the series is an exact polynomial.
    R coeff_or_zero(int i) const
    {
        return (i >= 0 && i <= prec_) ? c_[static_cast<std::size_t>(i)] : zero_like(c_.front());
    }
    R zero_coeff() const
    {
        return zero_like(c_.front());
    }

    // First nonzero index, or N+1 when zero to precision.
    int valuation() const
    {
        for (int i = 0; i <= prec_; ++i) {
            if (!is_zero(c_[static_cast<std::size_t>(i)])) {
                return i;
            }
        }
        return prec_ + 1;
    }
    OrderResult order() const
    {
        const int v = valuation();
        return v > prec_ ? OrderResult::zero_to_precision(prec_) : OrderResult::finite(v);
    }
    bool is_zero_to_precision() const
    {
        return valuation() > prec_;
    }
    // Index of the last nonzero stored coefficient.
    std::optional<int> degree() const
    {
        for (int i = prec_; i >= 0; --i) {
            if (!is_zero(c_[static_cast<std::size_t>(i)])) {
                return i;
            }
        }
        return std::nullopt;
    }

    Series truncated(int n) const
    {
        if (n > prec_) {
            throw PrecisionExhausted("cannot truncate to " + std::to_string(n) + " above precision "
                                     + std::to_string(prec_));
        }
        return Series(std::vector<R>(c_.begin(), c_.begin() + n + 1), n, zc_);
    }
    // Reinterpret the stored coefficients as an exact polynomial and extend the
    // precision with zeros.
    Series padded(int n) const
    {
        if (n <= prec_) {
            return truncated(n);
        }
        return Series(c_, n, zc_);
    }
    // Keep coefficients 0..maxdeg, zero the rest, same precision.
    Series low_part(int maxdeg) const
    {
        std::vector<R> v = c_;
        for (int i = std::max(maxdeg + 1, 0); i <= prec_; ++i) {
            v[static_cast<std::size_t>(i)] = zero_like(c_.front());
        }
        return Series(std::move(v), prec_, zc_ || maxdeg < 0);
    }
    // Multiplication by t^k, exact, so the precision grows by k.
    Series shift_up(int k) const
    {
        if (k == 0) {
            return *this;
        }
        std::vector<R> v(static_cast<std::size_t>(k), zero_like(c_.front()));
        v.insert(v.end(), c_.begin(), c_.end());
        return Series(std::move(v), prec_ + k, true);
    }
    // Exact division by t^k; the low k coefficients must vanish.
    Series shift_down(int k) const
    {
        if (k == 0) {
            return *this;
        }
        if (k > prec_) {
            throw PrecisionExhausted("division by t^" + std::to_string(k) + " of a series known to precision "
                                     + std::to_string(prec_));
        }
        for (int i = 0; i < k; ++i) {
            if (!is_zero(c_[static_cast<std::size_t>(i)])) {
                throw DivisibilityFailure("series not divisible by t^" + std::to_string(k));
            }
        }
        return Series(std::vector<R>(c_.begin() + k, c_.end()), prec_ - k, false);
    }
    Series with_zero_constant() const
    {
        return Series(c_, prec_, true);
    }

    Series operator-() const
    {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto &x : c_) {
            v.push_back(-x);
        }
        return Series(std::move(v), prec_, zc_);
    }
    Series scaled(const R &s) const
    {
        std::vector<R> v;
        v.reserve(c_.size());
        for (const auto &x : c_) {
            v.push_back(x * s);
        }
        return Series(std::move(v), prec_, zc_);
    }
    Series scaled(const Rational &q) const
        requires(!std::is_same_v<R, Rational>)
    {
        return scaled(embed_like(c_.front(), q));
    }

    friend Series operator+(const Series &a, const Series &b)
    {
        return a.combine(b, false);
    }
    friend Series operator-(const Series &a, const Series &b)
    {
        return a.combine(b, true);
    }
    // Truncated product with precision min(Na + val(b), Nb + val(a)): every
    // coefficient up to that index is determined by the stored data. The bound
    // never exceeds max(Na, Nb) + min(val(a), val(b)).
    friend Series operator*(const Series &a, const Series &b)
    {
        const int va = a.valuation();
        const int vb = b.valuation();
        const int n = std::min(a.prec_ + vb, b.prec_ + va);
        std::vector<R> v(static_cast<std::size_t>(n) + 1, a.zero_coeff());
        for (int i = va; i <= std::min(n, a.prec_); ++i) {
            const R &ai = a.c_[static_cast<std::size_t>(i)];
            if (is_zero(ai)) {
                continue;
            }
            const int jmax = std::min(n - i, b.prec_);
            for (int j = vb; j <= jmax; ++j) {
                const R &bj = b.c_[static_cast<std::size_t>(j)];
                if (!is_zero(bj)) {
                    v[static_cast<std::size_t>(i + j)] += ai * bj;
                }
            }
        }
        return Series(std::move(v), n, a.zc_ || b.zc_);
    }
    Series &operator+=(const Series &b)
    {
        return *this = *this + b;
    }
    Series &operator-=(const Series &b)
    {
        return *this = *this - b;
    }
    Series &operator*=(const Series &b)
    {
        return *this = *this * b;
    }

    // Coefficientwise equality on the common precision.
    bool equal_to_precision(const Series &o) const
    {
        const int n = std::min(prec_, o.prec_);
        for (int i = 0; i <= n; ++i) {
            if (!is_zero(c_[static_cast<std::size_t>(i)] - o.c_[static_cast<std::size_t>(i)])) {
                return false;
            }
        }
        return true;
    }

private:
    Series combine(const Series &b, bool subtract) const
    {
        const int n = std::min(prec_, b.prec_);
        std::vector<R> v(c_.begin(), c_.begin() + n + 1);
        for (int i = 0; i <= n; ++i) {
            if (subtract) {
                v[static_cast<std::size_t>(i)] -= b.c_[static_cast<std::size_t>(i)];
            } else {
                v[static_cast<std::size_t>(i)] += b.c_[static_cast<std::size_t>(i)];
            }
        }
        return Series(std::move(v), n, zc_ && b.zc_);
    }

    std::vector<R> c_;
    int prec_;
    bool zc_;
};

using TruncatedSeries = Series<Rational>;

template <class R>
OrderResult ps_order(const Series<R> &s)
{
    return s.order();
}

// Order of a - b on the common precision.
template <class R>
OrderResult agreement_order(const Series<R> &a, const Series<R> &b)
{
    return (a - b).order();
}

template <class R>
Series<R> ps_pow(const Series<R> &s, int e)
{
    Series<R> r = Series<R>::constant(embed_like(s[0], Rational(1)), s.precision());
    for (int i = 0; i < e; ++i) {
        r = r * s;
    }
    return r;
}

template <class R>
Series<R> ps_invert_unit(const Series<R> &s)
{
    if (!is_unit(s[0])) {
        throw NotAUnit("series with non-invertible constant term has no inverse");
    }
    const int n = s.precision();
    const R r0 = inverse(s[0]);
    std::vector<R> r(static_cast<std::size_t>(n) + 1, s.zero_coeff());
    r[0] = r0;
    for (int k = 1; k <= n; ++k) {
        R acc = s.zero_coeff();
        for (int i = 1; i <= k; ++i) {
            if (!is_zero(s[i])) {
                acc += s[i] * r[static_cast<std::size_t>(k - i)];
            }
        }
        r[static_cast<std::size_t>(k)] = -(r0 * acc);
    }
    return Series<R>(std::move(r), n);
}

// Square root with constant term hint; hint^2 must equal the constant term.
TruncatedSeries ps_sqrt(const TruncatedSeries &s, const Rational &hint);

// Human-readable form "c0 + c1*t + ... + O(t^(N+1))".
std::string to_string(const TruncatedSeries &s, bool with_big_o = true);

} // namespace arcspace
