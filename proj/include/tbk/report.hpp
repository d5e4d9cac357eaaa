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

// JSON and text reports for a knot, and the parallel verdict scan.
//
// Polynomials are arrays of [half_exponent, "coefficient"] pairs in
// ascending order; big integers and rationals are decimal strings
// ("num/den" for non-integers).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tbk/laurent.hpp"
#include "tbk/obstructions.hpp"
#include "tbk/rational.hpp"
#include "tbk/slopes.hpp"

namespace tbk {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json poly_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {p, q, even_cf, chirality}; chirality is "canonical" or "mirror".
Json knot_json(const TwoBridgeKnot& k);
TwoBridgeKnot knot_from_json(const Json& j);

Json invariants_json(const TwoBridgeKnot& k);
Json slope_record_json(const SlopeRecord& r);
Json slopes_json(const SlopeSummary& s);
Json casson_json(const SlopeSummary& s, const std::vector<Fraction>& slopes);
Json verdict_json(const ObstructionReport& r);

struct ReportOptions {
  bool invariants = true;
  bool slopes = true;
  std::vector<Fraction> casson_slopes = {Fraction(1), Fraction(2)};
  bool verdict = true;
  bool full = false;  // run every obstruction stage
};

// Fields in the order schema_version, knot, invariants, slopes, s_plus,
// s_minus, casson, verdict; disabled sections are omitted.
Json build_report(const TwoBridgeKnot& k, const ReportOptions& opt = {});

// Human-readable rendering of a report built by build_report.
std::string report_text(const Json& report);

struct ScanResult {
  std::vector<ObstructionReport> reports;  // canonical knots, ascending (p, q)
  std::size_t undetermined = 0;
};

// cosmetic_verdict over canonical_knots(max_p) on `jobs` worker threads.
// The result does not depend on `jobs`.
ScanResult scan_verdicts(long max_p, unsigned jobs = 1, bool full = false);

// {stage name: count} plus "UNDETERMINED".
Json scan_summary(const ScanResult& s);

}  // namespace tbk
