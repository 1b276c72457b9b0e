// SPDX-License-Identifier: Apache-2.0
#include <arcspace/poly_system.hpp>

#include <algorithm>
#include <set>

namespace arcspace
{

PolySystem::PolySystem(std::size_t nvars, std::vector<PolyTY> equations) : m(nvars), f(std::move(equations))
{
    for (const auto &fi : f) {
        if (fi.nvars() != m + 1) {
            throw ArityMismatch("equation has " + std::to_string(fi.nvars()) + " variables, expected t and "
                                + std::to_string(m) + " y-variables");
        }
    }
}

std::string PolySystem::str() const
{
    std::string out = "m=" + std::to_string(m) + ";";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out += " f" + std::to_string(i + 1) + " = " + f[i].str(ty_names(m), TermOrder::LastVariableLargest) + ";";
    }
    return out;
}

MinorSelection::MinorSelection(std::vector<int> cols, std::size_t m) : cols_(std::move(cols)), m_(m)
{
    std::sort(cols_.begin(), cols_.end());
    if (std::adjacent_find(cols_.begin(), cols_.end()) != cols_.end()) {
        throw BadSelection("repeated column in minor selection");
    }
    for (int c : cols_) {
        if (c < 1 || static_cast<std::size_t>(c) > m) {
            throw BadSelection("column " + std::to_string(c) + " outside 1.." + std::to_string(m));
        }
    }
    for (int j = 1; j <= static_cast<int>(m); ++j) {
        if (!contains(j)) {
            rest_.push_back(j);
        }
    }
}

std::vector<int> MinorSelection::permutation() const
{
    std::vector<int> p = cols_;
    p.insert(p.end(), rest_.begin(), rest_.end());
    return p;
}

bool MinorSelection::contains(int col) const
{
    return std::binary_search(cols_.begin(), cols_.end(), col);
}

std::string MinorSelection::str() const
{
    std::string out = "{";
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        out += (i ? "," : "") + std::to_string(cols_[i]);
    }
    return out + "}";
}

std::vector<MinorSelection> MinorSelection::all(std::size_t k, std::size_t m)
{
    std::vector<MinorSelection> out;
    if (k > m) {
        return out;
    }
    std::vector<int> idx(k);
    for (std::size_t i = 0; i < k; ++i) {
        idx[i] = static_cast<int>(i) + 1;
    }
    while (true) {
        out.emplace_back(idx, m);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(m - k) + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++idx[static_cast<std::size_t>(i)];
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

PolyMatrix jacobian(const PolySystem &sys)
{
    PolyMatrix j;
    for (const auto &fi : sys.f) {
        std::vector<PolyTY> row;
        for (std::size_t v = 1; v <= sys.m; ++v) {
            row.push_back(fi.derivative(v));
        }
        j.push_back(std::move(row));
    }
    return j;
}

namespace
{

PolyMatrix minor_without(const PolyMatrix &a, std::size_t row, std::size_t col)
{
    PolyMatrix out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == row) {
            continue;
        }
        std::vector<PolyTY> r;
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (j != col) {
                r.push_back(a[i][j]);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

void check_square(const PolyMatrix &a)
{
    if (a.empty()) {
        throw BadSelection("empty matrix");
    }
    for (const auto &r : a) {
        if (r.size() != a.size()) {
            throw BadSelection("matrix is not square");
        }
    }
}

} // namespace

PolyTY determinant(const PolyMatrix &a)
{
    check_square(a);
    if (a.size() == 1) {
        return a[0][0];
    }
    // Laplace expansion along the first row; blocks here are small (k x k).
    PolyTY det(a[0][0].nvars());
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[0][j].is_zero()) {
            continue;
        }
        const PolyTY term = a[0][j] * determinant(minor_without(a, 0, j));
        if (j % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

PolyMatrix adjugate(const PolyMatrix &a)
{
    check_square(a);
    const std::size_t n = a.size();
    const std::size_t nv = a[0][0].nvars();
    PolyMatrix adj(n, std::vector<PolyTY>(n, PolyTY(nv)));
    if (n == 1) {
        adj[0][0] = PolyTY::constant(nv, Rational(1));
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const PolyTY c = determinant(minor_without(a, i, j));
            adj[j][i] = (i + j) % 2 == 0 ? c : -c;
        }
    }
    return adj;
}

PolyMatrix matmul(const PolyMatrix &a, const PolyMatrix &b)
{
    const std::size_t nv = a.at(0).at(0).nvars();
    PolyMatrix out(a.size(), std::vector<PolyTY>(b.at(0).size(), PolyTY(nv)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b[0].size(); ++j) {
            for (std::size_t l = 0; l < b.size(); ++l) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

namespace
{

void check_selection(const PolySystem &sys, const MinorSelection &sel)
{
    if (sel.m() != sys.m) {
        throw BadSelection("selection made for " + std::to_string(sel.m()) + " variables, system has "
                           + std::to_string(sys.m));
    }
    if (sel.k() != sys.k()) {
        throw BadSelection("minor needs " + std::to_string(sys.k()) + " columns, got " + std::to_string(sel.k()));
    }
}

PolyMatrix columns(const PolySystem &sys, const std::vector<int> &cols)
{
    PolyMatrix out;
    for (const auto &fi : sys.f) {
        std::vector<PolyTY> row;
        for (int c : cols) {
            row.push_back(fi.derivative(static_cast<std::size_t>(c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

PolyMatrix selected_block(const PolySystem &sys, const MinorSelection &sel)
{
    check_selection(sys, sel);
    return columns(sys, sel.cols());
}

PolyMatrix complement_block(const PolySystem &sys, const MinorSelection &sel)
{
    check_selection(sys, sel);
    return columns(sys, sel.complement());
}

PolyTY minor_det(const PolySystem &sys, const MinorSelection &sel)
{
    return determinant(selected_block(sys, sel));
}

PolyMatrix adjugate_block(const PolySystem &sys, const MinorSelection &sel)
{
    const PolyMatrix block = selected_block(sys, sel);
    PolyMatrix adj = adjugate(block);
    const PolyTY det = determinant(block);
    const PolyMatrix prod = matmul(adj, block);
    for (std::size_t i = 0; i < prod.size(); ++i) {
        for (std::size_t j = 0; j < prod.size(); ++j) {
            const PolyTY expect = i == j ? det : PolyTY(det.nvars());
            if (!(prod[i][j] == expect)) {
                throw InternalInvariant("adjugate check failed");
            }
        }
    }
    return adj;
}

std::string to_string(const TruncatedVec &v, bool with_big_o)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + to_string(v[i], with_big_o);
    }
    return out + ")";
}

} // namespace arcspace
