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
#include "oracles/state_sum.hpp"
#include "tbk/errors.hpp"
#include "tbk/plat_diagram.hpp"
#include "tbk/seifert.hpp"

using namespace tbk;

TEST_CASE("4-plat diagrams of small knots") {
  const auto trefoil = plat_for_knot(normalize(3, 1));
  CHECK(trefoil.diagram.crossing_count() == 3);
  CHECK(trefoil.diagram.component_count() == 1);
  CHECK(trefoil.diagram.is_alternating());
  CHECK(trefoil.diagram.writhe() == 3);
  CHECK(all_A_circles(trefoil) == 2);
  CHECK(positive_crossings(trefoil) == 3);
  CHECK(signature_traczyk(trefoil) == -2);

  const auto fig8 = plat_for_knot(normalize(5, 2));
  CHECK(fig8.diagram.crossing_count() == 4);
  CHECK(fig8.diagram.writhe() == 0);
  CHECK(signature_traczyk(fig8) == 0);
}

TEST_CASE("Hopf link has two components") {
  const auto d = build_plat_signed(ContinuedFraction({2}));
  CHECK(d.diagram.component_count() == 2);
  CHECK(d.diagram.crossing_count() == 2);
  CHECK_THROWS_AS(positive_crossings(d), MultiComponent);
}

TEST_CASE("positive rewrite and input validation") {
  CHECK(positive_rewrite(ContinuedFraction({2, -2})).terms ==
        std::vector<long>{1, 2});
  CHECK(positive_rewrite(ContinuedFraction({4, -2, -2, 4})).size() > 0);
  CHECK_THROWS_AS(build_plat(ContinuedFraction({2, -2})), InvalidCF);
  CHECK_THROWS_AS(build_plat_signed(ContinuedFraction({2, 0, 2})), InvalidCF);
}

TEST_CASE("family signature cases by the diagram route") {
  // (x, y) = (1, 1): o = 5, y = 6; (1, -3): o = 5, y = 2.
  const auto d1 = plat_for_knot(family_knot(1, 1));
  CHECK(all_A_circles(d1) == 5);
  CHECK(positive_crossings(d1) == 6);
  CHECK(signature_traczyk(d1) == -2);
  const auto d3 = plat_for_knot(family_knot(1, -3));
  CHECK(all_A_circles(d3) == 5);
  CHECK(positive_crossings(d3) == 2);
  CHECK(signature_traczyk(d3) == 2);
  const auto d2 = plat_for_knot(family_knot(2, -1));
  CHECK(all_A_circles(d2) == 6);
  CHECK(signature_traczyk(d2) == 0);
}

TEST_CASE("PD round trip and mirror") {
  const Diagram d = plat_for_knot(normalize(7, 3)).diagram;
  const Diagram e = Diagram::from_pd(d.pd_code());
  CHECK(e.crossing_count() == d.crossing_count());
  CHECK(e.writhe() == d.writhe());
  CHECK(oracle::jones_state_sum(e) == oracle::jones_state_sum(d));
  const Diagram m = d.mirrored();
  CHECK(m.writhe() == -d.writhe());
  CHECK(oracle::jones_state_sum(m) == oracle::jones_state_sum(d).mirror_var());
}

TEST_CASE("left-handed trefoil from a PD code") {
  const Diagram d =
      Diagram::from_pd({{{1, 4, 2, 5}}, {{3, 6, 4, 1}}, {{5, 2, 6, 3}}});
  CHECK(d.writhe() == -3);
  CHECK(oracle::jones_state_sum(d).str() == "-t^-4 + t^-3 + t^-1");
}

TEST_CASE("switching and smoothing crossings") {
  const Diagram d = plat_for_knot(normalize(3, 1)).diagram;
  const Diagram s = d.switched(0);
  CHECK(s.writhe() == d.writhe() - 2);
  const Diagram z = d.smoothed(0);
  CHECK(z.crossing_count() == 2);
  CHECK(z.component_count() == 2);
}
