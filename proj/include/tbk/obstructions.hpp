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

// The purely-cosmetic-surgery obstruction pipeline for two-bridge knots.
//
// Stages, in order: the Hanselman gate (Alexander polynomial form, genus,
// signature), the Boyer-Lines a2 test, the SL(2,C) Casson difference at the
// slope pairs (1, -1) and (2, -2), and the finite-type test for the family
// C[4n, -2n, -2n, 4n].

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tbk/laurent.hpp"
#include "tbk/rational.hpp"

namespace tbk {

enum class Outcome { Excludes, Passes, NotApplicable };
enum class Verdict { NoCosmeticSurgeries, Undetermined };

std::string to_string(Outcome o);  // "EXCLUDES", "PASSES", "NOT_APPLICABLE"
std::string to_string(Verdict v);  // "NO_COSMETIC_SURGERIES", "UNDETERMINED"

struct HanselmanCheck {
  bool matches_family = false;
  // n with Delta = n t^2 - 4n t + (6n + 1) - 4n t^-1 + n t^-2.
  std::optional<BigInt> n_coefficient;
  // Slopes still allowed for a purely cosmetic pair, a subset of
  // {-2, -1, 1, 2}.
  std::vector<Fraction> allowed_slopes;
  bool genus_ok = false;
  bool signature_ok = false;
  // 1 <= (t + 2g) / (2g(g - 1)), the condition for the slopes +-1.
  bool genus_inequality = false;
  int thickness = 0;
  int genus = 0;
  int signature = 0;
  Outcome outcome = Outcome::Passes;
};

// The thickness t(K) is 0 for alternating knots.
HanselmanCheck hanselman_gate(const LaurentPoly& alexander, int signature,
                              int genus, int thickness = 0);

// z^2 coefficient of the Conway polynomial.
BigInt conway_a2(const LaurentPoly& conway);

Outcome boyer_lines_gate(const LaurentPoly& conway);

struct CassonCheck {
  Fraction at_one;  // casson_difference(K, 1)
  Fraction at_two;  // casson_difference(K, 2)
  Outcome outcome = Outcome::Passes;
};

// EXCLUDES when both slope pairs have different Casson invariants.
CassonCheck casson_gate(const TwoBridgeKnot& k);

struct FTIBundle {
  BigInt a2, a4, a6;
  Fraction v4, w4, v6;
  Fraction j4;
};

// Throws HypothesisViolation unless a2 = a6 = 0.
FTIBundle fti_bundle(const LaurentPoly& conway, const Fraction& j4);

// p^2 (j4/4 + 19 n^4) - 10 n^4 - 80 q^2 n^4.
Fraction ito_reduced(const Fraction& j4, long n, long p_squared,
                     long q_squared);

// p^2 (24 w4 - 5 v4) + 5 v4 + q^2 (210 v6 + 5 v4).
Fraction ito_equation(const FTIBundle& b, long p_squared, long q_squared);

struct ItoCheck {
  long n = 0;
  Fraction j4;
  Fraction at_slope_one;  // (p^2, q^2) = (1, 1)
  Fraction at_slope_two;  // (p^2, q^2) = (4, 1)
  Outcome outcome = Outcome::Passes;
};

// The reduced test from j4 and n alone.
ItoCheck ito_check(const Fraction& j4, long n);

// Throws HypothesisViolation if K's Conway polynomial has a2 != 0 or
// a6 != 0, and InvalidInput unless n >= 1.
ItoCheck ito_gate(const TwoBridgeKnot& k, long n);

// n if K is C[4n, -2n, -2n, 4n] up to mirror image.
std::optional<long> detect_ito_family(const TwoBridgeKnot& k);

struct Stage {
  std::string name;  // "hanselman", "boyer_lines", "casson", "ito"
  Outcome outcome = Outcome::Passes;
  nlohmann::ordered_json witness;
};

struct ObstructionReport {
  TwoBridgeKnot knot;
  std::vector<Stage> stages;
  Verdict verdict = Verdict::Undetermined;

  // The first stage with outcome EXCLUDES.
  const Stage* deciding_stage() const;
};

// Runs the stages in order and stops at the first EXCLUDES unless `full`.
ObstructionReport cosmetic_verdict(const TwoBridgeKnot& k, bool full = false);

}  // namespace tbk
