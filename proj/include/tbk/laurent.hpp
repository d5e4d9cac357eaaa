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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

// Sparse Laurent polynomial with integer coefficients on the (1/2)Z exponent
// grid. Exponents are stored doubled: key 1 is x^(1/2), key -4 is x^-2. The
// variable (t, z, A) is a matter of context.
class LaurentPoly {
 public:
  using Terms = std::map<long, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long c);           // NOLINT(google-explicit-constructor)
  LaurentPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  // c * x^(half_exponent / 2).
  static LaurentPoly monomial(const BigInt& c, long half_exponent);
  // c * x^e for integer e.
  static LaurentPoly term(const BigInt& c, long e) {
    return monomial(c, 2 * e);
  }
  // coeffs[i] * x^(lowest + i) on the integer grid.
  static LaurentPoly from_coeffs(long lowest, const std::vector<long>& coeffs);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Coefficient of x^(half_exponent / 2).
  BigInt coeff_half(long half_exponent) const;
  BigInt coeff(long e) const { return coeff_half(2 * e); }
  long min_half() const;
  long max_half() const;
  BigInt leading() const;
  BigInt trailing() const;
  bool on_integer_grid() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const BigInt& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(unsigned n) const;

  // x -> x^k. Throws GridViolation if some exponent leaves the (1/2)Z grid.
  LaurentPoly substitute_power(const Fraction& k) const;
  // x -> x^-1.
  LaurentPoly mirror_var() const;
  // Multiplies by x^(half_shift / 2).
  LaurentPoly shifted_half(long half_shift) const;
  // P(Q) for a polynomial P with nonnegative integer exponents. Used for
  // z -> t^(1/2) - t^(-1/2).
  LaurentPoly compose(const LaurentPoly& inner) const;

  // Sum of coefficients: the value at x = 1.
  BigInt value_at_one() const;
  // Value at x = -1. Throws GridViolation off the integer grid.
  BigInt value_at_minus_one() const;
  // P(x) == P(x^-1).
  bool is_palindromic() const;

  // Ascending order, e.g. "1 + 4z^4" or "-t^(1/2) - t^(5/2)".
  std::string str(char var = 't') const;
  // (half_exponent, coefficient) pairs, ascending.
  std::vector<std::pair<long, BigInt>> pairs() const;

 private:
  void add_term(long key, const BigInt& c);
  Terms terms_;
};

// x^(half_exponent / 2) convenience for the t variable.
inline LaurentPoly t_pow_half(long half_exponent) {
  return LaurentPoly::monomial(1, half_exponent);
}
inline LaurentPoly t_pow(long e) { return LaurentPoly::term(1, e); }

// Exact quotient in the Laurent ring, or nullopt if `den` does not divide
// `num`. Throws ZeroDivisor for den = 0.
std::optional<LaurentPoly> divides_exactly(const LaurentPoly& num,
                                           const LaurentPoly& den);

// Truncated power series c_0 + c_1 h + ... + c_order h^order.
struct RationalSeries {
  std::vector<Fraction> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const Fraction& operator[](std::size_t i) const { return coeffs[i]; }
  friend bool operator==(const RationalSeries&,
                         const RationalSeries&) = default;
};

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
// Product truncated to the smaller order.
RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);

// Taylor coefficients of P(e^h) at h = 0 up to h^order: the coefficient of
// h^m is sum_k c_k k^m / m!. P must lie on the integer grid.
RationalSeries exp_substitute(const LaurentPoly& p, unsigned order);

}  // namespace tbk
