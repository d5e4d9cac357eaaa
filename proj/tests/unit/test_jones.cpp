// Copyright 2026 The tbk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"
#include "tbk/errors.hpp"
#include "tbk/jones.hpp"

using namespace tbk;

TEST_CASE("Jones polynomials of table knots") {
  CHECK(jones_two_bridge(normalize(3, 1)).V.str() == "t + t^3 - t^4");
  CHECK(jones_two_bridge(normalize(5, 2)).V.str() ==
        "t^-2 - t^-1 + 1 - t + t^2");
  CHECK(jones_two_bridge(normalize(5, 1)).V.str() ==
        "t^2 + t^4 - t^5 + t^6 - t^7");
  CHECK(jones_two_bridge(normalize(7, 3)).V.str() ==
        "t - t^2 + 2t^3 - t^4 + t^5 - t^6");
  CHECK(jones_two_bridge(normalize(9, 2)).V.str() ==
        "t^-4 - t^-3 + t^-2 - 2t^-1 + 2 - t + t^2");
  CHECK(jones_two_bridge(normalize(13, 5)).V.str() ==
        "-t^-3 + 2t^-2 - 2t^-1 + 3 - 2t + 2t^2 - t^3");
  CHECK(jones_two_bridge(normalize(29, 12)).V.str() ==
        "t^-4 - 2t^-3 + 4t^-2 - 5t^-1 + 5 - 5t + 4t^2 - 2t^3 + t^4");
}

TEST_CASE("mirror inverts the variable") {
  const auto k = normalize(7, 2);
  CHECK(jones_two_bridge(mirror(k)).V == jones_two_bridge(k).V.mirror_var());
}

TEST_CASE("torus links T(2, m)") {
  CHECK(jones_torus_2m(-2).str() == "-t^(1/2) - t^(5/2)");
  CHECK(jones_torus_2m(2).str() == "-t^(-5/2) - t^(-1/2)");
  CHECK_THROWS_AS(jones_torus_2m(3), NotALink);
  CHECK_THROWS_AS(jones_torus_2m(0), InvalidInput);
  for (long m : {-2L, 2L, -4L, 4L, -8L}) {
    PlatDiagram d = build_plat_signed(ContinuedFraction({m}));
    Diagram dd = d.diagram;
    if (dd.writhe() != -m) dd = dd.reversed_component(0);
    REQUIRE(dd.writhe() == -m);
    CHECK(jones_from_bracket(bracket_plat(ContinuedFraction({m})),
                             dd.writhe()) == jones_torus_2m(m));
  }
}

TEST_CASE("family closed forms") {
  for (long n = 1; n <= 3; ++n) {
    const auto pieces = jones_family_pieces(n);
    CHECK(pieces.c_minus ==
          jones_two_bridge(knot_from_cf(ContinuedFraction({4 * n, -2 * n}))).V);
    CHECK(pieces.c_plus ==
          jones_two_bridge(knot_from_cf(ContinuedFraction({4 * n, 2 * n}))).V);
    const auto v = jones_two_bridge(family_knot_n(n)).V;
    CHECK(v == jones_family_skein(n));
    CHECK(v == jones_family_closed(n));
    CHECK(j4(v) == Fraction(-12 * n * n * n * n));
  }
  CHECK_THROWS_AS(jones_family_closed(0), InvalidInput);
}

TEST_CASE("h-expansion coefficients") {
  const LaurentPoly trefoil = jones_two_bridge(normalize(3, 1)).V;
  CHECK(jones_h_coefficient(trefoil, 0) == Fraction(1));
  CHECK(jones_h_coefficient(trefoil, 1) == Fraction(0));
  // V''(1) = -3 a2 for knots; a2(3_1) = 1.
  CHECK(jones_h_coefficient(trefoil, 2) == Fraction(-3));
  CHECK(j4(trefoil.mirror_var()) == j4(trefoil));
}

TEST_CASE("connected sum multiplies") {
  const auto a = jones_two_bridge(normalize(3, 1)).V;
  const auto b = jones_two_bridge(normalize(5, 2)).V;
  CHECK(jones_connected_sum(a, b) == a * b);
}
