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
#include "tbk/seifert.hpp"

using namespace tbk;

TEST_CASE("trefoil Seifert data") {
  const auto k = normalize(BigInt(3), BigInt(2));
  const auto s = seifert_data(k);
  CHECK(s.diag == std::vector<long>{1, 1});
  CHECK(conway_poly(s).str('z') == "1 + z^2");
  CHECK(alexander_poly(s).str() == "t^-1 - 1 + t");
  CHECK(signature_seifert(s) == 2);
  CHECK(signature_seifert(seifert_data(mirror(k))) == -2);
  CHECK(determinant(alexander_poly(s)) == 3);
  CHECK(genus_alternating(alexander_poly(s)) == 1);
  CHECK(is_fibered_alternating(alexander_poly(s)));
}

TEST_CASE("family member Conway polynomials") {
  const auto n1 = seifert_data(family_knot_n(1));
  CHECK(conway_poly(n1).str('z') == "1 + 4z^4");
  CHECK(signature_seifert(n1) == 0);
  const auto c1 = seifert_data(family_knot(1, 1));
  CHECK(signature_seifert(c1) == -2);
  CHECK(determinant(alexander_poly(c1)) == 31);
}

TEST_CASE("determinant equals p on small knots") {
  for (const auto& k : canonical_knots(41)) {
    const auto s = seifert_data(k);
    const auto delta = alexander_poly(s);
    CHECK(determinant(delta) == k.p());
    CHECK(delta.is_palindromic());
    CHECK(delta.value_at_one() == 1);
    CHECK(genus_alternating(delta) == static_cast<int>(s.genus()));
    CHECK(signature_seifert(seifert_data(mirror(k))) == -signature_seifert(s));
  }
}

TEST_CASE("signature fallback on vanishing minors") {
  std::vector<std::vector<Fraction>> h = {{0, 1}, {1, 0}};
  CHECK(symmetric_signature(h) == 0);
  std::vector<std::vector<Fraction>> z = {{0, 0}, {0, 0}};
  CHECK(symmetric_signature(z) == 0);
  std::vector<std::vector<Fraction>> d = {{1, 2, 0}, {2, 4, 1}, {0, 1, -3}};
  CHECK(symmetric_signature(d) == 1);
  SeifertData s{{1, 0}};
  CHECK_NOTHROW(signature_seifert(s));
}

TEST_CASE("Seifert input validation") {
  CHECK_THROWS_AS(seifert_from_cf(ContinuedFraction({2, 2, 2})), InvalidCF);
  CHECK_THROWS_AS(seifert_from_cf(ContinuedFraction({2, 3})), InvalidCF);
  CHECK_THROWS_AS(genus_alternating(LaurentPoly(1)), DegenerateAlexander);
}
