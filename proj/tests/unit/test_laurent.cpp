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
#include "tbk/laurent.hpp"

using namespace tbk;

TEST_CASE("laurent arithmetic") {
  const LaurentPoly t = t_pow(1);
  const LaurentPoly p = t + t_pow(-1) - 1;
  CHECK((p * p).str() == "t^-2 - 2t^-1 + 3 - 2t + t^2");
  CHECK(p.is_palindromic());
  CHECK_FALSE(t.is_palindromic());
  CHECK((p - p).is_zero());
  CHECK(p.pow(0) == LaurentPoly(1));
  CHECK(p.pow(3) == p * p * p);
  CHECK(p.value_at_one() == 1);
  CHECK(p.value_at_minus_one() == -3);
  CHECK(p.min_half() == -2);
  CHECK(p.max_half() == 2);
  CHECK(LaurentPoly::from_coeffs(-1, {1, 0, -3}).str() == "t^-1 - 3t");
  CHECK_THROWS_AS(LaurentPoly().min_half(), InvalidInput);
}

TEST_CASE("half exponents and substitution") {
  const LaurentPoly a = -t_pow_half(1) - t_pow_half(5);
  CHECK(a.str() == "-t^(1/2) - t^(5/2)");
  CHECK_FALSE(a.on_integer_grid());
  CHECK_THROWS_AS(a.value_at_minus_one(), GridViolation);
  CHECK(a.mirror_var().str() == "-t^(-5/2) - t^(-1/2)");
  const LaurentPoly q = t_pow(4) - 2 * t_pow(-8);
  CHECK(q.substitute_power(Fraction(-1, 4)).str() == "t^-1 - 2t^2");
  CHECK_THROWS_AS(t_pow(1).substitute_power(Fraction(1, 4)), GridViolation);
  CHECK(t_pow(3).shifted_half(-1) == t_pow_half(5));
  CHECK(LaurentPoly::term(4, 4).str('z') == "4z^4");
}

TEST_CASE("composition with z = t^(1/2) - t^(-1/2)") {
  const LaurentPoly conway = LaurentPoly(1) + LaurentPoly::term(1, 2);
  const LaurentPoly z = t_pow_half(1) - t_pow_half(-1);
  CHECK(conway.compose(z).str() == "t^-1 - 1 + t");
  CHECK_THROWS_AS(t_pow(-1).compose(z), GridViolation);
}

TEST_CASE("exact division") {
  const LaurentPoly a = t_pow(1) + 1;
  const LaurentPoly b = t_pow(2) - 1;
  auto q = divides_exactly(b, a);
  REQUIRE(q.has_value());
  CHECK(*q == t_pow(1) - 1);
  CHECK_FALSE(divides_exactly(b + 1, a).has_value());
  CHECK_FALSE(divides_exactly(LaurentPoly(1), 2 * t_pow(0)).has_value());
  CHECK(divides_exactly(t_pow(-3) * b, a) == t_pow(-3) * (t_pow(1) - 1));
  CHECK_THROWS_AS(divides_exactly(a, LaurentPoly()), ZeroDivisor);
}

TEST_CASE("exponential substitution series") {
  const auto s = exp_substitute(t_pow(1) - t_pow(-1), 3);
  CHECK(s[0] == Fraction(0));
  CHECK(s[1] == Fraction(2));
  CHECK(s[2] == Fraction(0));
  CHECK(s[3] == Fraction(1, 3));
  const auto sq = s * s;
  CHECK(sq[2] == Fraction(4));
  CHECK(sq[3] == Fraction(0));
  CHECK((s + s)[1] == Fraction(4));
}
