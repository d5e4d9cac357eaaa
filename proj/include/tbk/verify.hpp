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

// Reproduction suites for the family [2x, 2y, -2(x+y), 2x] and the
// generator catalog. Each suite returns a pass flag, one line per check and
// a description of every mismatch.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tbk/catalog.hpp"
#include "tbk/obstructions.hpp"

namespace tbk {

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what);
};

// Slope tables. With no arguments every region case is checked at its
// representative; `case_id` restricts to one row, and (x, y) overrides the
// parameters.
SuiteResult verify_slope_cases(std::optional<std::string> case_id = {},
                               std::optional<std::pair<long, long>> xy = {});

// S- - S+ = 2(x + 2y)(4x^2 - 6x + 5) on 1 <= x <= x_max, -y_max <= y < 0,
// x + y > 0.
SuiteResult verify_closed_form_grid(long x_max = 8, long y_max = 8);

// Conway polynomial 1 + 4n^4 z^4 for n = 1..n_max.
SuiteResult verify_conway_family(long n_min = 1, long n_max = 5);

// Jones polynomial identity, engine = skein assembly = closed form, and
// j4 = -12 n^4 for n = n_min..n_max.
SuiteResult verify_jones_family(long n_min = 1, long n_max = 4);

// Signature -2 / 0 / +2 on y > 0 / (y < 0, x + y > 0) / x + y < 0 by the
// Seifert matrix and by o(D) - y(D) - 1, with the closed counts of o(D) and
// y(D), over 1 <= x <= x_max, |y| <= y_max, y != 0, x + y != 0.
SuiteResult verify_signature_grid(long x_max = 8, long y_max = 8);

// The reduced finite-type expression: -74 n^4 and -26 n^4 at j4 = -12 n^4,
// and zeros at j4 = 284 n^4 and 14 n^4.
SuiteResult verify_ito_arithmetic(long n_min = 1, long n_max = 4);

// The pipeline on C[4n, -2n, -2n, 4n]: Hanselman, Boyer-Lines and Casson
// pass, the finite-type test excludes.
SuiteResult verify_family_pipeline(long n_min = 1, long n_max = 4);

// Fibered generators are exactly 6_3, 7_7, 8_12, 3_1#3_1*, 4_1#4_1 and all
// fail the Hanselman form.
SuiteResult verify_section3(const std::vector<CatalogEntry>& catalog);

}  // namespace tbk
