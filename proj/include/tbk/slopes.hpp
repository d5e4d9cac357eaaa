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

// Boundary slopes of two-bridge knots and the SL(2,C) Casson surgery
// difference.
//
// Boundary slopes come from the Direct expansions [a_1, ..., a_k] with all
// |a_i| >= 2 of p/r for both representatives r of the knot's oriented
// numerator in (-p, p). For an expansion, n+ counts the terms whose sign
// matches the pattern +, -, +, -, ...; the slope is
// N = 2[(n+ - n-) - (n0+ - n0-)] with n0 taken from the even expansion, and
// the weight is W = prod (|a_i| - 1).

#pragma once

#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

struct SlopeRecord {
  ContinuedFraction expansion;
  long n_plus = 0;
  long n_minus = 0;
  long slope = 0;
  BigInt weight;
};

struct SlopeSummary {
  std::vector<SlopeRecord> records;
  BigInt s_plus;
  BigInt s_minus;
};

// Every Direct expansion of u with all |terms| >= 2, in depth-first order
// (floor candidate before ceiling). Throws InvalidInput unless |u| > 1.
std::vector<ContinuedFraction> enumerate_expansions(const Fraction& u);

// n+ of an expansion.
long count_pattern_matches(const ContinuedFraction& cf);

// Records for the knot whose even expansion is `even_cf`, enumerated from
// p/r = the Direct value of `even_cf` and its other representative. Records
// are sorted by (slope, length, terms). Throws InvalidCF unless `even_cf` has
// even length and even terms.
SlopeSummary slope_records_from_even_cf(const ContinuedFraction& even_cf);

// slope_records_from_even_cf(k.even_cf()).
SlopeSummary slope_records(const TwoBridgeKnot& k);

// 1/4 sum_i W_i (|p - q N_i| - |-p - q N_i|) for the slope p/q, q >= 1.
// Throws InvalidSlope for q = 0 or a zero slope.
Fraction casson_difference(const SlopeSummary& s, const Fraction& slope);
Fraction casson_difference(const TwoBridgeKnot& k, const Fraction& slope);

// Whether (x, y) lies in x > 0, y < 0, x + y > 0.
bool in_family_region(long x, long y);

// S- - S+ for the family knot (x, y) by enumeration. Throws OutOfRegion
// outside x > 0, y < 0, x + y > 0.
BigInt s_difference_family(long x, long y);

// 2(x + 2y)(4x^2 - 6x + 5).
BigInt s_difference_closed(long x, long y);

}  // namespace tbk
