// SPDX-License-Identifier: Apache-2.0
#include <arcspace/polynomial.hpp>

#include <algorithm>
#include <numeric>

namespace arcspace
{

bool grlex_less(const Monomial &a, const Monomial &b, TermOrder order)
{
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) {
        return da < db;
    }
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order == TermOrder::LastVariableLargest ? n - 1 - k : k;
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return false;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational &c)
{
    Polynomial p(nvars);
    p.add_term(Monomial(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i)
{
    if (i >= nvars) {
        throw ArityMismatch("variable index out of range");
    }
    Monomial m(nvars, 0);
    m[i] = 1;
    Polynomial p(nvars);
    p.add_term(m, Rational(1));
    return p;
}

Polynomial Polynomial::term(const Monomial &m, const Rational &c)
{
    Polynomial p(m.size());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const
{
    const auto it = terms_.find(Monomial(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const
{
    int d = -1;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    }
    return d;
}

int Polynomial::degree_in(std::size_t i) const
{
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m[i]);
    }
    return d;
}

void Polynomial::add_term(const Monomial &m, const Rational &c)
{
    if (m.size() != nvars_) {
        throw ArityMismatch("monomial has " + std::to_string(m.size()) + " exponents, expected "
                            + std::to_string(nvars_));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    Polynomial r(nvars_);
    for (const auto &[m, c] : terms_) {
        if (m[var] > 0) {
            Monomial mm = m;
            --mm[var];
            r.add_term(mm, c * m[var]);
        }
    }
    return r;
}

Polynomial Polynomial::truncated_total_degree(int max_degree) const
{
    Polynomial r(nvars_);
    for (const auto &[m, c] : terms_) {
        if (std::accumulate(m.begin(), m.end(), 0) <= max_degree) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

Polynomial Polynomial::with_variable_zero(std::size_t var) const
{
    Polynomial r(nvars_);
    for (const auto &[m, c] : terms_) {
        if (m[var] == 0) {
            r.terms_.emplace(m, c);
        }
    }
    return r;
}

Polynomial Polynomial::substituted(std::size_t var, const Polynomial &q) const
{
    check_arity(q);
    std::vector<Polynomial> coeffs = coefficients_in(var);
    // Horner in q
    Polynomial r(nvars_);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        r = r * q + *it;
    }
    return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const
{
    std::vector<Polynomial> out(static_cast<std::size_t>(degree_in(var)) + 1, Polynomial(nvars_));
    for (const auto &[m, c] : terms_) {
        Monomial mm = m;
        mm[var] = 0;
        out[static_cast<std::size_t>(m[var])].add_term(mm, c);
    }
    return out;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(TermOrder order) const
{
    std::vector<std::pair<Monomial, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [order](const auto &a, const auto &b) { return grlex_less(b.first, a.first, order); });
    return v;
}

std::pair<Monomial, Rational> Polynomial::leading_term(TermOrder order) const
{
    if (terms_.empty()) {
        throw InvalidArgument("zero polynomial has no leading term");
    }
    auto best = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it) {
        if (grlex_less(best->first, it->first, order)) {
            best = it;
        }
    }
    return *best;
}

Polynomial Polynomial::monic(TermOrder order) const
{
    if (terms_.empty()) {
        return *this;
    }
    return *this * (Rational(1) / leading_term(order).second);
}

std::string Polynomial::str(const std::vector<std::string> &names, TermOrder order) const
{
    if (names.size() != nvars_) {
        throw ArityMismatch("wrong number of variable names");
    }
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : sorted_terms(order)) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty()) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += names[i];
            if (m[i] > 1) {
                mono += "^" + std::to_string(m[i]);
            }
        }
        if (mono.empty()) {
            out += to_string(a);
        } else if (a == 1) {
            out += mono;
        } else {
            out += to_string(a) + "*" + mono;
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto &[m, c] : r.terms_) {
        c = -c;
    }
    return r;
}

void Polynomial::check_arity(const Polynomial &o) const
{
    if (o.nvars_ != nvars_) {
        throw ArityMismatch("polynomials in " + std::to_string(nvars_) + " and " + std::to_string(o.nvars_)
                            + " variables combined");
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    check_arity(o);
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    check_arity(o);
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    a.check_arity(b);
    Polynomial r(a.nvars_);
    Monomial mm(a.nvars_);
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.nvars_; ++i) {
                mm[i] = ma[i] + mb[i];
            }
            r.add_term(mm, ca * cb);
        }
    }
    return r;
}

Polynomial &Polynomial::operator*=(const Polynomial &o)
{
    return *this = *this * o;
}

Polynomial &Polynomial::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_) {
        v *= c;
    }
    return *this;
}

Rational Polynomial::evaluate(const std::vector<Rational> &values) const
{
    if (values.size() != nvars_) {
        throw ArityMismatch("polynomial evaluated at the wrong number of values");
    }
    Rational acc = 0;
    for (const auto &[m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                t *= values[i];
            }
        }
        acc += t;
    }
    return acc;
}

Polynomial inverse(const Polynomial &p)
{
    if (!is_unit(p)) {
        throw NotAUnit("only nonzero constant polynomials are invertible");
    }
    return Polynomial::constant(p.nvars(), Rational(1) / p.constant_term());
}

std::vector<std::string> ty_names(std::size_t m)
{
    std::vector<std::string> names{"t"};
    for (std::size_t i = 1; i <= m; ++i) {
        names.push_back("y" + std::to_string(i));
    }
    return names;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows)
{
    std::size_t rank = 0;
    if (rows.empty()) {
        return 0;
    }
    const std::size_t ncols = rows.front().size();
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[rank]);
        const Rational inv = Rational(1) / rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) {
                continue;
            }
            const Rational factor = rows[r][col] * inv;
            for (std::size_t c = col; c < ncols; ++c) {
                rows[r][c] -= factor * rows[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace arcspace
