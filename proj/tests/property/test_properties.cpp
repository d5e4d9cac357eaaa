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

#include <string>

#include "doctest.h"
#include "property/properties.hpp"

using namespace tbk;

namespace {

void require_pass(const props::PropertyResult& r) {
  std::string failures;
  for (const auto& f : r.failures) failures += f + "; ";
  INFO(r.name, ": ", failures);
  CHECK(r.checked > 0);
  CHECK(r.failures.empty());
}

}  // namespace

TEST_CASE("transfer matrices agree with the state sum") {
  require_pass(props::transfer_matches_state_sum(12));
  require_pass(props::signed_transfer_matches_state_sum(400, 7));
}

TEST_CASE("Jones skein relation") { require_pass(props::skein_relation(10)); }

TEST_CASE("determinants and normalization") {
  require_pass(props::determinant_and_normalization(301));
}

TEST_CASE("mirror symmetries") { require_pass(props::mirror_symmetries(151)); }

TEST_CASE("signature by two routes") {
  require_pass(props::signature_routes_agree(201));
}

TEST_CASE("Casson reduction") { require_pass(props::casson_reduction(151)); }

TEST_CASE("connected-sum Alexander polynomial") {
  require_pass(props::connected_sum_alexander(200, 11));
}

TEST_CASE("presentation invariance") {
  require_pass(props::presentation_invariance(101));
}
