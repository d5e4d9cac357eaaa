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
#include "tbk/catalog.hpp"
#include "tbk/errors.hpp"

#include <string>

using namespace tbk;

namespace {
const std::string kHeader = "name,kind,descriptor,alexander,genus,signature,source\n";
}

TEST_CASE("bundled catalog") {
  const auto c = load_catalog();
  REQUIRE(c.size() == 8);
  CHECK(c[0].name == "6_3");
  CHECK(c[0].knot);
  CHECK(c[0].alexander.str() == "t^-2 - 3t^-1 + 5 - 3t + t^2");
  for (const auto& e : c) CHECK(e.genus == 2);
  std::vector<std::string> fibered;
  for (const auto& e : fibered_generators(c)) fibered.push_back(e.name);
  CHECK(fibered == std::vector<std::string>{"6_3", "7_7", "8_12", "3_1#3_1*",
                                            "4_1#4_1"});
  for (const auto& e : fibered_generators(c)) {
    REQUIRE(e.signature);
    CHECK(*e.signature == 0);
  }
  for (const auto& [name, h] : section3_verdict(c)) {
    CHECK_FALSE(h.matches_family);
    CHECK(h.outcome == Outcome::Excludes);
  }
}

TEST_CASE("connected sums multiply Alexander polynomials") {
  const auto c = parse_catalog(kHeader + "s,sum,3_1:3_1*,,2,0,x\nf,sum,4_1:4_1,,2,,x\n");
  const LaurentPoly t31 = t_pow(1) - 1 + t_pow(-1);
  const LaurentPoly t41 = -t_pow(1) + 3 - t_pow(-1);
  CHECK(c[0].alexander == t31 * t31);
  CHECK(c[1].alexander == t41 * t41);
  CHECK(c[1].signature == 0);
}

TEST_CASE("catalog validation errors") {
  CHECK_THROWS_AS(parse_catalog("bad header\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog(kHeader + "a,table,,1;-3;1;-3;1,2,,x\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_catalog(kHeader + "a,twobridge,13/5,1;-4;7;-4;1,2,0,x\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_catalog(kHeader + "a,twobridge,13/5,,3,0,x\n"),
                  ValidationError);
  CHECK_THROWS_AS(parse_catalog(kHeader + "a,sum,3_1:9_9,,2,0,x\n"), ParseError);
  CHECK_THROWS_AS(parse_catalog(kHeader + "a,weird,,1,0,,x\n"), ParseError);
  try {
    parse_catalog(kHeader + "a,table,,1,0,,x\nb,table\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("built-in factor names") {
  CHECK(builtin_knot("3_1")->p() == 3);
  CHECK(builtin_knot("6_2")->p() == 11);
  CHECK_FALSE(builtin_knot("7_1"));
}
