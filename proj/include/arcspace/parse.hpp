// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <arcspace/deformation.hpp>
#include <arcspace/poly_system.hpp>

namespace arcspace
{

// Expression grammar shared by every literal:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*      division only by nonzero constants
//   factor  := primary ['^' integer]
//   primary := integer | name | '(' expr ')' | '-' primary
// Names must come from the given list; anything else is a ParseError.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string> &names);

// Polynomial in t, y1..ym.
PolyTY parse_poly(std::string_view text, std::size_t m);

// Series in t at precision N. A trailing "+ O(t^k)" lowers the precision to k-1.
TruncatedSeries parse_series(std::string_view text, int N);
// "(s1, s2, ...)" of series in t; every component must have zero constant term.
TruncatedVec parse_series_vec(std::string_view text, int N);

// Series in t with coefficients in Q[s1..sp]/m^(M+1).
NilSeries parse_nil_series(std::string_view text, const NilRing &ring, int N);

// Exact polynomial in t (or t, s1..sp) to a truncated series.
TruncatedSeries series_from_poly(const Polynomial &p, int N);
NilSeries nil_series_from_poly(const Polynomial &p, const NilRing &ring, int N);

// Statement file: "key = value;" statements, '#' starts a comment.
//   m = 3;  f1 = y1^2 - y2*y3;  minor = {1};  N = 24;  d = 2;  gauge = minor;
//   y = (t^2, t, t^3);  (also ybar, z, a2)
//   params = 2;  nilorder = 3;  deform y1 = t^2 + s1*t;
//   gval = t^4 - s1*t^3;  F = s2*t^3;  D = 4;
struct SystemFile {
    PolySystem system;
    std::optional<std::vector<int>> minor;
    std::optional<int> N;
    std::optional<int> d;
    std::optional<std::string> gauge;
    // Named vectors of exact polynomials in t.
    std::map<std::string, std::vector<Polynomial>> vectors;
    std::optional<int> params;
    std::optional<int> nilorder;
    // Deformation template: component index (1-based) -> polynomial in t, s1..sp.
    std::map<int, Polynomial> deform;
    std::optional<Polynomial> gval;
    std::optional<Polynomial> F;
    std::optional<int> D;

    // Canonical text; parse_system(str()) reproduces the same value.
    std::string str() const;
    bool operator==(const SystemFile &) const = default;

    NilRing nil_ring() const;
    TruncatedVec vector(const std::string &name, int N) const;
    NilVec deform_template(int N) const;
};

SystemFile parse_system(std::string_view text);

} // namespace arcspace
