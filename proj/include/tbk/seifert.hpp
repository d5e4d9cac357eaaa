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

// Seifert-matrix invariants of two-bridge knots.
//
// For the even expansion [2c_1, ..., 2c_2m] the Seifert matrix V is upper
// bidiagonal with V[i][i] = d_i = (-1)^(i+1) c_i and V[i][i+1] = 1. Everything
// here (Conway, Alexander, signature, genus) is read off that matrix.

#pragma once

#include <vector>

#include "tbk/laurent.hpp"
#include "tbk/rational.hpp"

namespace tbk {

struct SeifertData {
  std::vector<long> diag;

  std::size_t genus() const { return diag.size() / 2; }
};

// Throws InvalidCF unless every term is even and the length is even.
SeifertData seifert_from_cf(const ContinuedFraction& even_cf);
SeifertData seifert_data(const TwoBridgeKnot& k);

// Conway polynomial in z from D_k = d_k z D_{k-1} + D_{k-2}.
LaurentPoly conway_poly(const SeifertData& s);

// Alexander polynomial in t: Conway at z = t^(1/2) - t^(-1/2).
LaurentPoly alexander_poly(const SeifertData& s);

// Conway-to-Alexander substitution for any Conway polynomial.
LaurentPoly conway_to_alexander(const LaurentPoly& conway);

// Signature of V + V^T via principal minors, with an exact congruence
// diagonalization when a minor vanishes.
int signature_seifert(const SeifertData& s);

// Signature of an arbitrary symmetric rational matrix by exact congruence
// diagonalization (rows of `m` are rows of the matrix).
int symmetric_signature(std::vector<std::vector<Fraction>> m);

// Half the exponent breadth. Throws DegenerateAlexander for constants.
int genus_alternating(const LaurentPoly& alexander);

// Leading coefficient is +-1.
bool is_fibered_alternating(const LaurentPoly& alexander);

// |Delta(-1)|.
BigInt determinant(const LaurentPoly& alexander);

}  // namespace tbk
