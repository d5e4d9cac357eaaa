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

#include <numeric>

#include "doctest.h"
#include "tbk/errors.hpp"
#include "tbk/rational.hpp"

using namespace tbk;

TEST_CASE("fraction arithmetic is exact and canonical") {
  Fraction a(6, -4);
  CHECK(a.str() == "-3/2");
  CHECK(a.den() == 2);
  CHECK(a + Fraction(3, 2) == Fraction(0));
  CHECK(Fraction(7, 3).floor() == 2);
  CHECK(Fraction(-7, 3).floor() == -3);
  CHECK(Fraction(-7, 3).ceil() == -2);
  CHECK(Fraction::parse("10/4") == Fraction(5, 2));
  CHECK(Fraction(1, 3) < Fraction(1, 2));
  CHECK_THROWS_AS(Fraction(1, 0), DivisionByZero);
  CHECK_THROWS_AS(Fraction(0).reciprocal(), DivisionByZero);
  CHECK_THROWS_AS(Fraction::parse("x/2"), InvalidInput);
}

TEST_CASE("continued fractions evaluate in both conventions") {
  CHECK(eval_cf(ContinuedFraction({2, 2, -4, 2})) == Fraction(12, 31));
  CHECK(eval_cf(ContinuedFraction({2, 1, 1, 2, 1, 1})) == Fraction(12, 31));
  CHECK(eval_cf(ContinuedFraction({3, 1, 1, 1, 1}, Convention::Direct)) ==
        Fraction(18, 5));
  CHECK(parse_cf("4,-2,-2,4").terms == std::vector<long>{4, -2, -2, 4});
  CHECK_THROWS_AS(parse_cf("1,0,2"), InvalidCF);
  CHECK_THROWS_AS(parse_cf("1,,2"), InvalidCF);
  CHECK_THROWS_AS(eval_cf(ContinuedFraction({1, -1})), DivisionByZero);
  CHECK(ContinuedFraction({1, 2, 3}).reversed().str() == "[3,2,1]");
}

TEST_CASE("even expansion") {
  CHECK(even_expansion(Fraction(2, 3)).terms == std::vector<long>{2, -2});
  CHECK(even_expansion(Fraction(12, 31)).terms ==
        std::vector<long>{2, 2, -4, 2});
  CHECK(even_expansion(Fraction(-2, 3)).terms == std::vector<long>{-2, 2});
  CHECK_THROWS_AS(even_expansion(Fraction(1, 4)), NotAKnot);
  CHECK_THROWS_AS(even_expansion(Fraction(1, 3)), InvalidFraction);
  for (long p = 3; p < 60; p += 2) {
    for (long q = 2; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      const auto cf = even_expansion(Fraction(q, p));
      CHECK(cf.size() % 2 == 0);
      CHECK(eval_cf(cf) == Fraction(q, p));
      for (long a : cf.terms) CHECK(a % 2 == 0);
    }
  }
}

TEST_CASE("positive expansion") {
  CHECK(positive_expansion(Fraction(12, 31)).terms ==
        std::vector<long>{2, 1, 1, 2, 2});
  CHECK(positive_expansion(Fraction(-5, 7)).terms ==
        std::vector<long>{-1, -2, -2});
  CHECK_THROWS_AS(positive_expansion(Fraction(3, 2)), InvalidFraction);
}

TEST_CASE("normalization picks the smallest even class member") {
  const auto k = normalize(BigInt(3), BigInt(1));
  CHECK(k.q() == 2);
  CHECK(k.mirrored());
  CHECK(normalize(BigInt(5), BigInt(2)).q() == 2);
  CHECK(normalize(BigInt(5), BigInt(3)) == normalize(BigInt(5), BigInt(2)));
  const auto a = normalize(BigInt(7), BigInt(3));
  CHECK(a.q() == 2);
  CHECK(normalize(BigInt(7), BigInt(5)) == a);
  CHECK(normalize(BigInt(7), BigInt(2)) == mirror(a));
  CHECK_THROWS_AS(normalize(BigInt(6), BigInt(1)), NotAKnot);
  CHECK_THROWS_AS(normalize(BigInt(9), BigInt(3)), InvalidFraction);
  CHECK_THROWS_AS(normalize(BigInt(1), BigInt(0)), InvalidFraction);
  CHECK(mirror(mirror(a)) == a);
  CHECK(a.name() == "b(7,2)*");
}

TEST_CASE("family parameters") {
  const auto k = family_knot(1, 1);
  CHECK(k.even_cf().terms == std::vector<long>{2, 2, -4, 2});
  CHECK(k.p() == 31);
  REQUIRE(k.family().has_value());
  CHECK(k.family()->x == 1);
  CHECK(k.family()->y == 1);
  CHECK_FALSE(k.family()->n.has_value());
  const auto m = mirror(k);
  REQUIRE(m.family().has_value());
  CHECK(m.family()->x == 1);
  CHECK(m.family()->y == -2);
  const auto n1 = family_knot_n(1);
  CHECK(n1.family()->n == 1);
  CHECK(n1.even_cf().terms == std::vector<long>{4, -2, -2, 4});
  CHECK(n1.p() == 65);
  CHECK(is_amphichiral(n1) == is_amphichiral(mirror(n1)));
  CHECK_THROWS_AS(family_knot(1, -1), InvalidInput);
  CHECK_THROWS_AS(family_knot_n(0), InvalidInput);
}

TEST_CASE("canonical knot enumeration") {
  const auto ks = canonical_knots(9);
  std::vector<std::string> names;
  for (const auto& k : ks) names.push_back(k.name());
  CHECK(names == std::vector<std::string>{"b(3,2)", "b(5,2)", "b(5,4)",
                                          "b(7,2)", "b(7,6)", "b(9,2)",
                                          "b(9,8)"});
  CHECK(is_amphichiral(normalize(BigInt(5), BigInt(2))));
  CHECK_FALSE(is_amphichiral(normalize(BigInt(7), BigInt(2))));
}
