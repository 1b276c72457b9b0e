// SPDX-License-Identifier: Apache-2.0
#include <arcspace/triviality.hpp>

#include <map>
#include <set>

namespace arcspace
{

namespace
{

// Non-increasing partitions of n into exactly k parts, each at most cap.
void partitions(int n, int k, int cap, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    if (k == 0) {
        if (n == 0) {
            out.push_back(cur);
        }
        return;
    }
    for (int part = std::min(n - (k - 1), cap); part >= 1; --part) {
        if (part * k < n) {
            break;
        }
        cur.push_back(part);
        partitions(n - part, k - 1, part, cur, out);
        cur.pop_back();
    }
}

} // namespace

BrieskornSpec::BrieskornSpec(std::vector<int> exponents, int cutoff) : c(std::move(exponents)), lmax(cutoff)
{
    if (c.empty()) {
        throw InvalidArgument("Brieskorn polynomial needs at least one exponent");
    }
    for (int e : c) {
        if (e < 2) {
            throw InvalidArgument("Brieskorn exponents must be at least 2");
        }
    }
    if (lmax < 1) {
        throw InvalidArgument("degree cutoff must be at least 1");
    }
}

std::vector<std::string> BrieskornRing::names() const
{
    static const std::string letters = "yzwxuvrqpn";
    std::vector<std::string> out;
    for (std::size_t b = 0; b < c.size(); ++b) {
        const std::string stem = b < letters.size() ? std::string(1, letters[b]) : "b" + std::to_string(b + 1) + "_";
        for (int j = 1; j <= lmax; ++j) {
            out.push_back(stem + std::to_string(j));
        }
    }
    return out;
}

Polynomial brieskorn_F(const BrieskornSpec &spec, int ell)
{
    const BrieskornRing ring(spec);
    Polynomial out(ring.nvars());
    if (ell < 1 || ell > spec.lmax) {
        return out;
    }
    for (std::size_t b = 0; b < spec.c.size(); ++b) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        partitions(ell, spec.c[b], ell, cur, parts);
        for (const auto &p : parts) {
            Monomial mono(ring.nvars(), 0);
            for (int j : p) {
                ++mono[ring.index(b, j)];
            }
            out.add_term(mono, Rational(1));
        }
    }
    return out;
}

bool IndependenceReport::all_independent() const
{
    for (const auto &r : rows) {
        if (!r.independent) {
            return false;
        }
    }
    return true;
}

bool IndependenceReport::all_distinct() const
{
    for (const auto &r : rows) {
        if (!r.distinct_monomials) {
            return false;
        }
    }
    return true;
}

std::string IndependenceReport::conclusion() const
{
    if (all_independent()) {
        return "heuristic: the partial derivatives of every F_l are linearly independent, so no nonzero derivation "
               "of the required shape exists up to the cutoff; under the conditional triviality criterion this "
               "points to a formal neighborhood that is not analytically trivial (not a proof)";
    }
    return "heuristic: some F_l has dependent partial derivatives; the obstruction does not apply at this cutoff";
}

IndependenceReport derivative_independence(const BrieskornSpec &spec)
{
    const BrieskornRing ring(spec);
    IndependenceReport rep;
    for (int ell = 1; ell <= spec.lmax; ++ell) {
        const Polynomial F = brieskorn_F(spec, ell);
        IndependenceRow row;
        row.ell = ell;
        row.terms = F.terms().size();
        std::vector<Polynomial> ders;
        for (std::size_t v = 0; v < ring.nvars(); ++v) {
            Polynomial dv = F.derivative(v);
            if (!dv.is_zero()) {
                ders.push_back(std::move(dv));
            }
        }
        row.count = ders.size();
        std::map<Monomial, std::size_t> column;
        std::set<Monomial> seen;
        row.distinct_monomials = true;
        for (const auto &dv : ders) {
            for (const auto &[mono, coef] : dv.terms()) {
                column.emplace(mono, column.size());
                if (!seen.insert(mono).second) {
                    row.distinct_monomials = false;
                }
            }
        }
        std::vector<std::vector<Rational>> mat;
        for (const auto &dv : ders) {
            std::vector<Rational> r(column.size(), Rational(0));
            for (const auto &[mono, coef] : dv.terms()) {
                r[column.at(mono)] = coef;
            }
            mat.push_back(std::move(r));
        }
        row.rank = mat.empty() ? 0 : rational_rank(mat);
        row.independent = row.rank == row.count;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace arcspace
