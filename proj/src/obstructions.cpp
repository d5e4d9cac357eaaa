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

#include "tbk/obstructions.hpp"

#include "tbk/errors.hpp"
#include "tbk/jones.hpp"
#include "tbk/seifert.hpp"
#include "tbk/slopes.hpp"

namespace tbk {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Excludes: return "EXCLUDES";
    case Outcome::Passes: return "PASSES";
    case Outcome::NotApplicable: return "NOT_APPLICABLE";
  }
  return "";
}

std::string to_string(Verdict v) {
  return v == Verdict::NoCosmeticSurgeries ? "NO_COSMETIC_SURGERIES"
                                           : "UNDETERMINED";
}

namespace {

LaurentPoly hanselman_form(const BigInt& n) {
  return LaurentPoly::term(n, 2) + LaurentPoly::term(-4 * n, 1) +
         LaurentPoly(6 * n + 1) + LaurentPoly::term(-4 * n, -1) +
         LaurentPoly::term(n, -2);
}

}  // namespace

HanselmanCheck hanselman_gate(const LaurentPoly& alexander, int signature,
                              int genus, int thickness) {
  HanselmanCheck h;
  h.thickness = thickness;
  h.genus = genus;
  h.signature = signature;
  // Delta(1) = +-1 fixes the overall sign only up to units; compare both.
  for (int s : {1, -1}) {
    const LaurentPoly d = s == 1 ? alexander : -alexander;
    const BigInt n = d.coeff(2);
    if (n >= 1 && d == hanselman_form(n)) {
      h.matches_family = true;
      h.n_coefficient = n;
    }
  }
  h.genus_ok = genus == 2;
  h.signature_ok = signature == 0;
  if (genus >= 2) {
    const BigInt lhs = 2L * genus * (genus - 1);
    h.genus_inequality = lhs <= BigInt(thickness + 2 * genus);
  }
  if (h.genus_inequality) {
    h.allowed_slopes.push_back(Fraction(-1));
    h.allowed_slopes.push_back(Fraction(1));
  }
  if (h.genus_ok) {
    h.allowed_slopes.insert(h.allowed_slopes.begin(), Fraction(-2));
    h.allowed_slopes.push_back(Fraction(2));
  }
  const bool passes = h.matches_family && h.genus_ok && h.signature_ok &&
                      !h.allowed_slopes.empty();
  h.outcome = passes ? Outcome::Passes : Outcome::Excludes;
  return h;
}

BigInt conway_a2(const LaurentPoly& conway) { return conway.coeff(2); }

Outcome boyer_lines_gate(const LaurentPoly& conway) {
  return conway_a2(conway) != 0 ? Outcome::Excludes : Outcome::Passes;
}

CassonCheck casson_gate(const TwoBridgeKnot& k) {
  const SlopeSummary s = slope_records(k);
  CassonCheck c;
  c.at_one = casson_difference(s, Fraction(1));
  c.at_two = casson_difference(s, Fraction(2));
  c.outcome = (!c.at_one.is_zero() && !c.at_two.is_zero()) ? Outcome::Excludes
                                                            : Outcome::Passes;
  return c;
}

FTIBundle fti_bundle(const LaurentPoly& conway, const Fraction& j4) {
  FTIBundle b;
  b.a2 = conway.coeff(2);
  b.a4 = conway.coeff(4);
  b.a6 = conway.coeff(6);
  if (b.a2 != 0 || b.a6 != 0) {
    throw HypothesisViolation("finite-type test needs a2 = a6 = 0, got a2 = " +
                              b.a2.get_str() + ", a6 = " + b.a6.get_str());
  }
  const Fraction a4(b.a4);
  b.j4 = j4;
  b.v4 = -a4 / Fraction(2);
  b.w4 = j4 / Fraction(96) + Fraction(3) * a4 / Fraction(32);
  b.v6 = -a4 / Fraction(12);
  return b;
}

Fraction ito_reduced(const Fraction& j4, long n, long p_squared,
                     long q_squared) {
  const BigInt n4 = BigInt(n) * n * n * n;
  const Fraction fn4(n4);
  return Fraction(p_squared) * (j4 / Fraction(4) + Fraction(19) * fn4) -
         Fraction(10) * fn4 - Fraction(80 * q_squared) * fn4;
}

Fraction ito_equation(const FTIBundle& b, long p_squared, long q_squared) {
  return Fraction(p_squared) * (Fraction(24) * b.w4 - Fraction(5) * b.v4) +
         Fraction(5) * b.v4 +
         Fraction(q_squared) * (Fraction(210) * b.v6 + Fraction(5) * b.v4);
}

ItoCheck ito_check(const Fraction& j4, long n) {
  if (n < 1) throw InvalidInput("family index n must be positive");
  ItoCheck c;
  c.n = n;
  c.j4 = j4;
  c.at_slope_one = ito_reduced(j4, n, 1, 1);
  c.at_slope_two = ito_reduced(j4, n, 4, 1);
  c.outcome = (!c.at_slope_one.is_zero() && !c.at_slope_two.is_zero())
                  ? Outcome::Excludes
                  : Outcome::Passes;
  return c;
}

ItoCheck ito_gate(const TwoBridgeKnot& k, long n) {
  const LaurentPoly conway = conway_poly(seifert_data(k));
  const Fraction j = j4(jones_two_bridge(k).V);
  const FTIBundle b = fti_bundle(conway, j);
  ItoCheck c = ito_check(j, n);
  const BigInt n4 = BigInt(n) * n * n * n;
  if (b.a4 != 4 * n4) {
    throw HypothesisViolation("a4 = " + b.a4.get_str() + " differs from 4n^4");
  }
  if (ito_equation(b, 1, 1) != c.at_slope_one ||
      ito_equation(b, 4, 1) != c.at_slope_two) {
    throw ValidationError("reduced finite-type form disagrees with the full one");
  }
  return c;
}

std::optional<long> detect_ito_family(const TwoBridgeKnot& k) {
  const auto fam = k.family();
  if (!fam || !fam->n) return std::nullopt;
  return fam->n;
}

const Stage* ObstructionReport::deciding_stage() const {
  for (const auto& s : stages) {
    if (s.outcome == Outcome::Excludes) return &s;
  }
  return nullptr;
}

ObstructionReport cosmetic_verdict(const TwoBridgeKnot& k, bool full) {
  ObstructionReport r;
  r.knot = k;
  auto done = [&]() { return !full && r.deciding_stage() != nullptr; };

  const SeifertData sd = seifert_data(k);
  const LaurentPoly conway = conway_poly(sd);
  const LaurentPoly alexander = conway_to_alexander(conway);
  const int sigma = signature_seifert(sd);
  const int genus = genus_alternating(alexander);

  {
    const HanselmanCheck h = hanselman_gate(alexander, sigma, genus);
    Stage s{"hanselman", h.outcome, nlohmann::ordered_json::object()};
    s.witness["matches_family"] = h.matches_family;
    if (h.n_coefficient) {
      s.witness["n_coefficient"] = h.n_coefficient->get_str();
    }
    s.witness["genus"] = genus;
    s.witness["signature"] = sigma;
    s.witness["thickness"] = h.thickness;
    s.witness["genus_inequality"] = h.genus_inequality;
    auto slopes = nlohmann::ordered_json::array();
    for (const auto& f : h.allowed_slopes) slopes.push_back(f.str());
    s.witness["allowed_slopes"] = slopes;
    r.stages.push_back(std::move(s));
  }
  if (!done()) {
    Stage s{"boyer_lines", boyer_lines_gate(conway),
            nlohmann::ordered_json::object()};
    s.witness["a2"] = conway_a2(conway).get_str();
    r.stages.push_back(std::move(s));
  }
  if (!done()) {
    const CassonCheck c = casson_gate(k);
    Stage s{"casson", c.outcome, nlohmann::ordered_json::object()};
    s.witness["1"] = c.at_one.str();
    s.witness["2"] = c.at_two.str();
    r.stages.push_back(std::move(s));
  }
  if (!done()) {
    Stage s{"ito", Outcome::NotApplicable, nlohmann::ordered_json::object()};
    if (const auto n = detect_ito_family(k)) {
      const ItoCheck c = ito_gate(k, *n);
      s.outcome = c.outcome;
      s.witness["n"] = *n;
      s.witness["j4"] = c.j4.str();
      s.witness["slope_1"] = c.at_slope_one.str();
      s.witness["slope_2"] = c.at_slope_two.str();
    }
    r.stages.push_back(std::move(s));
  }
  r.verdict = r.deciding_stage() ? Verdict::NoCosmeticSurgeries
                                 : Verdict::Undetermined;
  return r;
}

}  // namespace tbk
