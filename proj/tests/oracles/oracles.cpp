// SPDX-License-Identifier: Apache-2.0
#include "oracles/oracles.hpp"

#include <set>

namespace arcspace::oracle
{

Dense dense(const TruncatedSeries &s, int N)
{
    Dense out(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int i = 0; i <= std::min(N, s.precision()); ++i) {
        out[static_cast<std::size_t>(i)] = s[i];
    }
    return out;
}

Dense dense_mul(const Dense &a, const Dense &b, int N)
{
    Dense out(static_cast<std::size_t>(N) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= N; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= N; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Dense dense_add(const Dense &a, const Dense &b)
{
    Dense out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

Dense dense_scale(const Dense &a, const Rational &c)
{
    Dense out = a;
    for (auto &x : out) {
        x *= c;
    }
    return out;
}

Dense dense_eval(const PolyTY &p, const std::vector<Dense> &y, int N)
{
    Dense tvar(static_cast<std::size_t>(N) + 1, Rational(0));
    if (N >= 1) {
        tvar[1] = 1;
    }
    Dense acc(static_cast<std::size_t>(N) + 1, Rational(0));
    for (const auto &[mono, c] : p.terms()) {
        Dense term(static_cast<std::size_t>(N) + 1, Rational(0));
        term[0] = c;
        for (std::size_t v = 0; v < mono.size(); ++v) {
            for (int e = 0; e < mono[v]; ++e) {
                term = dense_mul(term, v == 0 ? tvar : y[v - 1], N);
            }
        }
        acc = dense_add(acc, term);
    }
    return acc;
}

Rational binomial(const Rational &alpha, int n)
{
    Rational r(1);
    for (int i = 0; i < n; ++i) {
        r *= (alpha - i) / Rational(i + 1);
    }
    return r;
}

Dense binomial_series(const Rational &alpha, const Rational &c, int k, int N)
{
    Dense out(static_cast<std::size_t>(N) + 1, Rational(0));
    Rational cp(1);
    for (int n = 0; n * k <= N; ++n) {
        out[static_cast<std::size_t>(n * k)] = binomial(alpha, n) * cp;
        cp *= c;
    }
    return out;
}

TruncatedVec whitney_closed_form(const TruncatedVec &z, const TruncatedSeries &a2, const TruncatedSeries &a3, int d,
                                 int N)
{
    const int W = N + 2 * d;
    const Dense z1 = dense(z[0], W);
    const Dense z2 = dense(z[1], W);
    const Dense z3 = dense(z[2], W);
    const Dense A2 = dense(a2, W);
    const Dense A3 = dense(a3, W);
    const Rational z1d = z1[static_cast<std::size_t>(d)];
    // h = (z1^2 - z2 z3) / t^{2d}
    const Dense num = dense_add(dense_mul(z1, z1, W), dense_scale(dense_mul(z2, z3, W), Rational(-1)));
    Dense xi(static_cast<std::size_t>(N) + 1, Rational(0));
    for (int i = 0; i <= N; ++i) {
        xi[static_cast<std::size_t>(i)] = -num[static_cast<std::size_t>(i + 2 * d)];
    }
    xi[0] += z1d * z1d;
    xi = dense_add(xi, dense_mul(z2, A3, N));
    xi = dense_add(xi, dense_mul(z3, A2, N));
    const Dense a23 = dense_mul(A2, A3, N);
    for (int i = 2 * d; i <= N; ++i) {
        xi[static_cast<std::size_t>(i)] += a23[static_cast<std::size_t>(i - 2 * d)];
    }
    xi.resize(static_cast<std::size_t>(N) + 1);
    const TruncatedSeries root = ps_sqrt(TruncatedSeries(xi, N), z1d);

    std::vector<Rational> y1(static_cast<std::size_t>(N) + 1, Rational(0));
    std::vector<Rational> y2(y1), y3(y1);
    for (int i = 0; i <= N; ++i) {
        const auto u = static_cast<std::size_t>(i);
        y1[u] = z1[u];
        y2[u] = z2[u];
        y3[u] = z3[u];
        if (i >= d) {
            y1[u] += root[i - d];
        }
        if (i == d) {
            y1[u] -= z1d;
        }
        if (i >= 2 * d) {
            y2[u] += A2[static_cast<std::size_t>(i - 2 * d)];
            y3[u] += A3[static_cast<std::size_t>(i - 2 * d)];
        }
    }
    return {TruncatedSeries(y1, N, true), TruncatedSeries(y2, N, true), TruncatedSeries(y3, N, true)};
}

TruncatedVec brute_force_lift(const PolySystem &sys, int col, const TruncatedVec &ybar, int d, int c, int N)
{
    const auto ci = static_cast<std::size_t>(col - 1);
    const int W = N + d;
    std::vector<Dense> y;
    for (const auto &s : ybar) {
        y.push_back(dense(s, W));
    }
    for (int j = c; j <= W; ++j) {
        y[ci][static_cast<std::size_t>(j)] = 0;
    }
    for (int j = c; j <= N; ++j) {
        const auto u = static_cast<std::size_t>(j);
        y[ci][u] = 0;
        const Rational r0 = dense_eval(sys.f[0], y, W)[static_cast<std::size_t>(j + d)];
        y[ci][u] = 1;
        const Rational r1 = dense_eval(sys.f[0], y, W)[static_cast<std::size_t>(j + d)];
        if (r1 == r0) {
            throw InternalInvariant("brute-force step has a vanishing linear coefficient");
        }
        y[ci][u] = -r0 / (r1 - r0);
    }
    TruncatedVec out;
    for (auto &v : y) {
        v.resize(static_cast<std::size_t>(N) + 1);
        out.emplace_back(v, N, true);
    }
    return out;
}

NilElement drinfeld_u(int sign, int M)
{
    const NilRing ring(4, M);
    Polynomial u(4);
    for (int n = 1; 2 * n - 1 <= M; ++n) {
        Rational c = -binomial(Rational(1, 2), n) / 2;
        for (int i = 0; i < n; ++i) {
            c *= 4 * sign;
        }
        u.add_term(Monomial{0, 0, n, n - 1}, c);
    }
    return NilElement(ring, u);
}

bool certify_empty(const ZdStarSystem &sys)
{
    std::vector<Polynomial> eqs = sys.equations;
    Polynomial ineq = sys.inequation;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &e : eqs) {
            if (e.terms().size() != 1) {
                continue;
            }
            const Monomial &mono = e.terms().begin()->first;
            std::size_t var = mono.size();
            int nonzero = 0;
            for (std::size_t v = 0; v < mono.size(); ++v) {
                if (mono[v] > 0) {
                    var = v;
                    ++nonzero;
                }
            }
            if (nonzero != 1) {
                continue;
            }
            for (auto &q : eqs) {
                q = q.with_variable_zero(var);
            }
            ineq = ineq.with_variable_zero(var);
            changed = true;
            break;
        }
        if (ineq.is_zero()) {
            return true;
        }
        for (const auto &e : eqs) {
            if (e.is_constant() && !e.is_zero()) {
                return true;
            }
        }
    }
    return false;
}

int Sampler::uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Sampler::small()
{
    return Rational(uniform(-4, 4), uniform(1, 3));
}

Rational Sampler::nonzero()
{
    Rational r(0);
    while (r == 0) {
        r = small();
    }
    return r;
}

TruncatedSeries Sampler::poly(int lo, int hi, int N, double density)
{
    std::vector<Rational> c(static_cast<std::size_t>(N) + 1, Rational(0));
    std::bernoulli_distribution keep(density);
    for (int j = std::max(lo, 0); j <= std::min(hi, N); ++j) {
        if (keep(rng_)) {
            c[static_cast<std::size_t>(j)] = small();
        }
    }
    return TruncatedSeries(std::move(c), N, lo > 0);
}

TruncatedVec Sampler::whitney_zdstar(int d, int N)
{
    // z1 = c t^d, z2 = t^e u2, z3 = t^{2d-e} u3 with u2(0) u3(0) = c^2.
    const Rational c = nonzero();
    const int e = uniform(1, 2 * d - 1 > 0 ? 2 * d - 1 : 1);
    const Rational r = nonzero();
    TruncatedSeries z1 = TruncatedSeries::monomial(c, d, N);
    std::vector<Rational> u2(static_cast<std::size_t>(N) + 1, Rational(0));
    std::vector<Rational> u3(u2);
    if (2 * d - e < 1) {
        throw InvalidArgument("Whitney sampler needs d >= 1");
    }
    u2[static_cast<std::size_t>(e)] = r;
    u3[static_cast<std::size_t>(2 * d - e)] = c * c / r;
    for (int j = e + 1; j <= 2 * d; ++j) {
        u2[static_cast<std::size_t>(j)] = small();
    }
    for (int j = 2 * d - e + 1; j <= 2 * d; ++j) {
        u3[static_cast<std::size_t>(j)] = small();
    }
    return {z1.with_zero_constant(), TruncatedSeries(u2, N, true), TruncatedSeries(u3, N, true)};
}

TruncatedVec Sampler::cusp_zdstar(int d, int N)
{
    if (d % 3 != 0) {
        throw InvalidArgument("the cusp has remainders in Z_d* only for 3 | d");
    }
    const int k = d / 3;
    const Rational r = nonzero();
    std::vector<Rational> z1(static_cast<std::size_t>(N) + 1, Rational(0));
    z1[static_cast<std::size_t>(2 * k)] = r * r;
    for (int j = 2 * k + 1; j <= 2 * d; ++j) {
        z1[static_cast<std::size_t>(j)] = small();
    }
    return {TruncatedSeries(z1, N, true), TruncatedSeries::monomial(r * r * r, d, N).with_zero_constant()};
}

} // namespace arcspace::oracle
