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

// Jones polynomials of two-bridge knots through the Kauffman bracket.
//
// Bracket conventions: loop value delta = -A^2 - A^-2, the unknot has bracket
// 1, V = (-A^3)^(-w) <D> and t = A^-4. Polynomials in A are LaurentPoly
// values in the variable A.

#pragma once

#include "tbk/laurent.hpp"
#include "tbk/plat_diagram.hpp"
#include "tbk/rational.hpp"

namespace tbk {

// <T> = v0 <[0]> + vinf <[inf]> for a two-string tangle T.
struct BracketState {
  LaurentPoly v0;
  LaurentPoly vinf;
};

struct JonesResult {
  LaurentPoly V;
  int writhe = 0;
};

// Adds one twist region to the tangle state.
BracketState apply_twist(const BracketState& s, const TwistRegion& region);

// Bracket of the 4-plat closure of an Inverse expansion, by transfer
// matrices over its twist regions.
LaurentPoly bracket_plat(const ContinuedFraction& cf);

// (-A^3)^(-w) <D> with A = t^(-1/4).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

// Jones polynomial of the 4-plat closure of `cf`, oriented as the diagram
// engine orients it.
JonesResult jones_plat(const ContinuedFraction& cf);

JonesResult jones_two_bridge(const TwoBridgeKnot& k);

// T(2, m) with the orientation in which all crossings have sign -sign(m).
// Throws NotALink for odd m and InvalidInput for m = 0.
LaurentPoly jones_torus_2m(long m);

struct FamilyPieces {
  LaurentPoly c_minus;  // C[4n, -2n]
  LaurentPoly c_plus;   // C[4n, 2n]
  LaurentPoly l_n;      // C[4n, -2n] # T(2, -4n)
};

// Closed forms, expanded exactly. Throws ValidationError if a division in
// the closed form is not exact.
FamilyPieces jones_family_pieces(long n);

// V of C[4n, -2n, -2n, 4n] assembled from the pieces by the skein recursion.
LaurentPoly jones_family_skein(long n);

// 1 + (1 - t^2n)(1 - t^-2n)(t^2n - t^-2n)^2 (t + 1 + t^-1)
//     / ((1 + t)^2 (1 + t^-1)^2).
LaurentPoly jones_family_closed(long n);

// Coefficient of h^4 in V(e^h). Throws GridViolation off the integer grid.
Fraction j4(const LaurentPoly& v);

// Coefficient of h^k in V(e^h).
Fraction jones_h_coefficient(const LaurentPoly& v, unsigned k);

// Product of the factors' Jones polynomials.
LaurentPoly jones_connected_sum(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace tbk
