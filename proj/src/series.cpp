// SPDX-License-Identifier: Apache-2.0
#include <arcspace/series.hpp>

namespace arcspace
{

TruncatedSeries ps_sqrt(const TruncatedSeries &s, const Rational &hint)
{
    const Rational &s0 = s[0];
    if (s0.is_zero()) {
        throw NonUnitRadicand("square root of a series with zero constant term");
    }
    if (!rational_sqrt(s0)) {
        throw NotASquare("constant term " + to_string(s0) + " is not the square of a rational");
    }
    if (hint * hint != s0) {
        throw NotASquare("leading hint " + to_string(hint) + " does not square to " + to_string(s0));
    }
    // r_n = (s_n - sum_{0<i<n} r_i r_{n-i}) / (2 r_0)
    const int n = s.precision();
    std::vector<Rational> r(static_cast<std::size_t>(n) + 1);
    r[0] = hint;
    const Rational twice_inv = Rational(1) / (2 * hint);
    for (int k = 1; k <= n; ++k) {
        Rational acc = s[k];
        for (int i = 1; i < k; ++i) {
            acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(k - i)];
        }
        r[static_cast<std::size_t>(k)] = acc * twice_inv;
    }
    return TruncatedSeries(std::move(r), n);
}

namespace
{

void append_term(std::string &out, const Rational &c, int k)
{
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
        out += neg ? "-" : "";
    } else {
        out += neg ? " - " : " + ";
    }
    if (k == 0) {
        out += to_string(a);
        return;
    }
    if (a != 1) {
        out += to_string(a) + "*";
    }
    out += "t";
    if (k != 1) {
        out += "^" + std::to_string(k);
    }
}

} // namespace

std::string to_string(const TruncatedSeries &s, bool with_big_o)
{
    std::string out;
    for (int k = 0; k <= s.precision(); ++k) {
        if (!s[k].is_zero()) {
            append_term(out, s[k], k);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    if (with_big_o) {
        out += " + O(t^" + std::to_string(s.precision() + 1) + ")";
    }
    return out;
}

} // namespace arcspace
