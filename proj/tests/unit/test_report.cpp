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
#include "tbk/report.hpp"
#include "tbk/verify.hpp"

using namespace tbk;

TEST_CASE("report layout") {
  const Json r = build_report(normalize(65, 18));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"schema_version", "knot", "invariants",
                                         "slopes", "s_plus", "s_minus",
                                         "casson", "verdict"});
  CHECK(r["knot"]["p"] == "65");
  CHECK(r["knot"]["even_cf"] == Json::array({4, -2, -2, 4}));
  CHECK(r["invariants"]["determinant"] == "65");
  CHECK(r["invariants"]["conway"] == Json::parse(R"([[0,"1"],[8,"4"]])"));
  CHECK(r["slopes"].size() == 9);
  CHECK(r["casson"]["1"] == "0");
  CHECK(r["verdict"]["stage"] == "ito");
  CHECK(report_text(r).find("NO_COSMETIC_SURGERIES") != std::string::npos);
}

TEST_CASE("knot and polynomial round trip") {
  for (const auto& k : canonical_knots(25)) {
    for (const auto& kk : {k, mirror(k)}) {
      CHECK(knot_from_json(knot_json(kk)) == kk);
      const Json inv = invariants_json(kk);
      CHECK(invariants_json(knot_from_json(knot_json(kk))) == inv);
      CHECK(poly_json(poly_from_json(inv["jones"])) == inv["jones"]);
    }
  }
  CHECK_THROWS_AS(knot_from_json(Json::parse(R"({"p":"5"})")), InvalidInput);
}

TEST_CASE("scan is independent of the worker count") {
  const ScanResult a = scan_verdicts(65, 1);
  const ScanResult b = scan_verdicts(65, 3);
  REQUIRE(a.reports.size() == b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(verdict_json(a.reports[i]) == verdict_json(b.reports[i]));
  }
  CHECK(a.undetermined == 0);
  CHECK(scan_verdicts(3).reports.size() == 1);
  CHECK_THROWS_AS(scan_verdicts(2), InvalidInput);
  CHECK(scan_summary(a)["stages"]["ito"] == 1);
}

TEST_CASE("reproduction suites") {
  CHECK(verify_slope_cases().pass);
  CHECK(verify_slope_cases(std::string("2-4")).pass);
  CHECK_THROWS_AS(verify_slope_cases(std::string("x")), InvalidInput);
  CHECK(verify_conway_family(1, 2).pass);
  CHECK(verify_jones_family(1, 2).pass);
  CHECK(verify_ito_arithmetic(1, 2).pass);
  CHECK(verify_signature_grid(3, 3).pass);
  CHECK(verify_closed_form_grid(4, 4).pass);
}
