// SPDX-License-Identifier: Apache-2.0
#include <arcspace/poly_system.hpp>

#include "helpers.hpp"

using namespace arcspace;
using namespace arcspace::test;

TEST_CASE("substitution into the example systems")
{
    CHECK(substitute(whitney(), V("(t^2, t, t^3)"))[0].is_zero_to_precision());
    CHECK(substitute(cusp(), V("(t^2, t^3)"))[0].is_zero_to_precision());
    CHECK(same(substitute(whitney(), V("(t, t, 0)"))[0], S("t^2"), 16));
}

TEST_CASE("Jacobian")
{
    const auto J = jacobian(whitney());
    REQUIRE(J.size() == 1);
    REQUIRE(J[0].size() == 3);
    CHECK(J[0][0] == parse_poly("2*y1", 3));
    CHECK(J[0][1] == parse_poly("-y3", 3));
    CHECK(J[0][2] == parse_poly("-y2", 3));
    const PolySystem lin(2, {parse_poly("y1", 2), parse_poly("y2", 2)});
    const auto I = jacobian(lin);
    CHECK(I[0][0] == parse_poly("1", 2));
    CHECK(I[0][1].is_zero());
    CHECK(I[1][1] == parse_poly("1", 2));
    CHECK(jacobian(cusp())[0][0] == parse_poly("3*y1^2", 2));
    CHECK(jacobian(cusp())[0][1] == parse_poly("-2*y2", 2));
}

TEST_CASE("minors and adjugates")
{
    CHECK(minor_det(whitney(), MinorSelection({1}, 3)) == parse_poly("2*y1", 3));
    CHECK(minor_det(cusp(), MinorSelection({2}, 2)) == parse_poly("-2*y2", 2));
    const PolySystem lin(2, {parse_poly("y1", 2), parse_poly("y2", 2)});
    CHECK(minor_det(lin, MinorSelection({1, 2}, 2)) == parse_poly("1", 2));
    const auto adj1 = adjugate_block(whitney(), MinorSelection({3}, 3));
    CHECK(adj1[0][0] == parse_poly("1", 3));

    const PolyMatrix a{{parse_poly("y1", 2), parse_poly("y2", 2)}, {parse_poly("t", 2), parse_poly("y1*y2", 2)}};
    const auto adj = adjugate(a);
    CHECK(adj[0][0] == a[1][1]);
    CHECK(adj[0][1] == -a[0][1]);
    CHECK(adj[1][0] == -a[1][0]);
    CHECK(adj[1][1] == a[0][0]);
    const auto prod = matmul(adj, a);
    const auto det = determinant(a);
    CHECK(prod[0][0] == det);
    CHECK(prod[1][1] == det);
    CHECK(prod[0][1].is_zero());
}

TEST_CASE("selections")
{
    const MinorSelection s({3, 1}, 4);
    CHECK(s.cols() == std::vector<int>{1, 3});
    CHECK(s.complement() == std::vector<int>{2, 4});
    CHECK(s.permutation() == std::vector<int>{1, 3, 2, 4});
    CHECK(s.str() == "{1,3}");
    CHECK(MinorSelection::all(2, 3).size() == 3);
    CHECK_THROWS_AS(MinorSelection({0}, 3), BadSelection);
    CHECK_THROWS_AS(MinorSelection({1, 1}, 3), BadSelection);
    CHECK_THROWS_AS(MinorSelection({4}, 3), BadSelection);
}

TEST_CASE("arity is checked")
{
    CHECK_THROWS_AS(substitute(whitney(), V("(t, t)")), ArityMismatch);
    CHECK_THROWS_AS(PolySystem(2, {parse_poly("y1*y2*y3", 3)}), ArityMismatch);
}
