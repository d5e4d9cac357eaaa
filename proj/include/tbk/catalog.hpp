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

// The catalog of prime-or-composite alternating genus-two generators, read
// from a CSV file.
//
// CSV columns: name,kind,descriptor,alexander,genus,signature,source.
// kind is "twobridge" (descriptor p/q), "sum" (descriptor "A:B" naming the
// factors, a trailing "*" meaning the mirror image) or "table" (alexander
// given). alexander lists the coefficients from the lowest to the highest
// power, separated by ";", and may be empty for twobridge and sum rows.
// Fields may not contain commas.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbk/laurent.hpp"
#include "tbk/obstructions.hpp"
#include "tbk/rational.hpp"

namespace tbk {

enum class EntryKind { TwoBridge, Sum, Table };

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Table;
  std::string descriptor;
  LaurentPoly alexander;  // symmetric, in t
  int genus = 0;
  std::optional<int> signature;
  std::string source;
  std::optional<TwoBridgeKnot> knot;  // twobridge rows
  std::vector<std::string> factors;   // sum rows
};

// TBK_CATALOG if set, otherwise the bundled data/generators.csv.
std::string default_catalog_path();

// Parses and validates a catalog. Throws ParseError (with the line number)
// on malformed rows and ValidationError when a stored invariant disagrees
// with the recomputed one or Delta(1) != +-1.
std::vector<CatalogEntry> parse_catalog(const std::string& text);
std::vector<CatalogEntry> load_catalog(const std::string& path);
std::vector<CatalogEntry> load_catalog();

// Built-in two-bridge names used for connected-sum factors not in the
// catalog: 3_1, 4_1, 5_1, 5_2, 6_1, 6_2, 6_3.
std::optional<TwoBridgeKnot> builtin_knot(const std::string& name);

// Symmetric Alexander polynomial from coefficients listed lowest first.
LaurentPoly alexander_from_coeffs(const std::vector<long>& coeffs);

// Entries with monic Alexander polynomial.
std::vector<CatalogEntry> fibered_generators(
    const std::vector<CatalogEntry>& catalog);

// The Hanselman gate on each fibered generator.
std::vector<std::pair<std::string, HanselmanCheck>> section3_verdict(
    const std::vector<CatalogEntry>& catalog);

}  // namespace tbk
