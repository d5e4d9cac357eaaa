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

// The boundary-slope case tables for the family [2x, 2y, -2(x+y), 2x] on the
// region x > 0, y < 0, x + y > 0, and a checker comparing them with the
// enumeration.
//
// Region cases: 1 is y < -1, x + y > 1; 2 is y < -1, x + y = 1; 3 is y = -1,
// x + y > 1; 4 is (x, y) = (2, -1).

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

struct SlopeCase {
  std::string id;  // "<region case>-<index>"
  int region_case = 0;
  std::function<std::vector<long>(long, long)> expansion;
  std::function<long(long, long)> n_plus;
  std::function<long(long, long)> n_minus;
  std::function<long(long, long)> slope;
  // Absent where the table gives no weight (slope 0 rows).
  std::function<BigInt(long, long)> weight;
};

const std::vector<SlopeCase>& slope_cases();

// Region case of (x, y), or 0 outside x > 0, y < 0, x + y > 0.
int region_case(long x, long y);

// Default parameters per region case: (4,-2), (4,-3), (3,-1), (2,-1).
std::pair<long, long> representative(int region_case);

// A table entry whose printed value disagrees with its own printed data.
struct Erratum {
  std::string id;
  std::string field;  // "N" or "W"
};

// The known entries. Each is confirmed by check_slope_cases, not assumed.
const std::vector<Erratum>& known_errata();

struct CaseCheck {
  std::string id;
  ContinuedFraction expansion;
  bool found = false;  // printed expansion is among the enumerated ones
  long printed_n_plus = 0, n_plus = 0;
  long printed_n_minus = 0, n_minus = 0;
  long printed_slope = 0, slope = 0;
  std::optional<BigInt> printed_weight;
  BigInt weight;
  // Fields that differ from the enumerated record.
  std::vector<std::string> mismatches;
  // Mismatched fields whose printed value also contradicts the printed
  // expansion or printed n+/n- (so the table, not the enumeration, is wrong).
  std::vector<std::string> self_contradictions;
};

struct CaseTableCheck {
  long x = 0, y = 0;
  int region_case = 0;
  std::vector<CaseCheck> cases;
  // Enumerated expansions that no table row accounts for.
  std::vector<ContinuedFraction> unmatched;
  std::size_t enumerated = 0;
  // Table and enumeration agree line for line, except for known errata
  // that are confirmed as self-contradictions.
  bool pass = false;
  std::vector<std::string> errata_applied;
  std::vector<std::string> failures;
};

// Checks the table of region_case(x, y) at (x, y). Throws OutOfRegion
// outside the region.
CaseTableCheck check_slope_cases(long x, long y,
                                 std::optional<std::string> only_id = {});

}  // namespace tbk
