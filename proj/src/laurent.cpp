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

#include "tbk/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "tbk/errors.hpp"

namespace tbk {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigInt(c)) {}

LaurentPoly::LaurentPoly(const BigInt& c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(const BigInt& c, long half_exponent) {
  LaurentPoly p;
  p.add_term(half_exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long lowest,
                                     const std::vector<long>& coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    p.add_term(2 * (lowest + static_cast<long>(i)), coeffs[i]);
  }
  return p;
}

void LaurentPoly::add_term(long key, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPoly::coeff_half(long half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

long LaurentPoly::min_half() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_half() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

BigInt LaurentPoly::leading() const {
  return terms_.empty() ? BigInt(0) : terms_.rbegin()->second;
}

BigInt LaurentPoly::trailing() const {
  return terms_.empty() ? BigInt(0) : terms_.begin()->second;
}

bool LaurentPoly::on_integer_grid() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first % 2 == 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute_power(const Fraction& k) const {
  if (k.is_zero()) throw InvalidInput("substitute_power needs k != 0");
  LaurentPoly r;
  for (const auto& [key, c] : terms_) {
    const Fraction scaled = Fraction(key) * k;
    if (!scaled.is_integer()) {
      throw GridViolation("substitution leaves the half-integer grid");
    }
    r.add_term(scaled.num().get_si(), c);
  }
  return r;
}

LaurentPoly LaurentPoly::mirror_var() const {
  LaurentPoly r;
  for (const auto& [key, c] : terms_) r.add_term(-key, c);
  return r;
}

LaurentPoly LaurentPoly::shifted_half(long half_shift) const {
  LaurentPoly r;
  for (const auto& [key, c] : terms_) r.add_term(key + half_shift, c);
  return r;
}

LaurentPoly LaurentPoly::compose(const LaurentPoly& inner) const {
  if (terms_.empty()) return {};
  if (min_half() < 0 || !on_integer_grid()) {
    throw GridViolation("compose needs a polynomial with natural exponents");
  }
  // Horner from the top degree down.
  const long top = max_half() / 2;
  LaurentPoly acc;
  for (long e = top; e >= 0; --e) {
    acc = acc * inner + LaurentPoly(coeff(e));
  }
  return acc;
}

BigInt LaurentPoly::value_at_one() const {
  BigInt s = 0;
  for (const auto& kv : terms_) s += kv.second;
  return s;
}

BigInt LaurentPoly::value_at_minus_one() const {
  if (!on_integer_grid()) {
    throw GridViolation("evaluation at -1 needs integer exponents");
  }
  BigInt s = 0;
  for (const auto& [key, c] : terms_) {
    if ((key / 2) % 2 == 0) {
      s += c;
    } else {
      s -= c;
    }
  }
  return s;
}

bool LaurentPoly::is_palindromic() const { return *this == mirror_var(); }

namespace {

std::string exponent_text(long key) {
  if (key % 2 == 0) {
    return std::to_string(key / 2);
  }
  return "(" + std::to_string(key) + "/2)";
}

}  // namespace

std::string LaurentPoly::str(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (key == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << var;
    if (key != 2) os << '^' << exponent_text(key);
  }
  return os.str();
}

std::vector<std::pair<long, BigInt>> LaurentPoly::pairs() const {
  return {terms_.begin(), terms_.end()};
}

std::optional<LaurentPoly> divides_exactly(const LaurentPoly& num,
                                           const LaurentPoly& den) {
  if (den.is_zero()) throw ZeroDivisor("division by the zero polynomial");
  if (num.is_zero()) return LaurentPoly();
  // Shift both to ordinary polynomials and run long division from the top,
  // rejecting as soon as a quotient coefficient is not integral.
  const long den_low = den.min_half();
  const long den_high = den.max_half();
  const BigInt lead = den.leading();
  LaurentPoly rem = num;
  LaurentPoly quotient;
  while (!rem.is_zero()) {
    const long top = rem.max_half();
    if (top - den_high < rem.min_half() - den_low) return std::nullopt;
    const BigInt c = rem.leading();
    if (c % lead != 0) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(c / lead, top - den_high);
    quotient += step;
    rem -= step * den;
    if (!rem.is_zero() && rem.max_half() >= top) return std::nullopt;
  }
  return quotient;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  RationalSeries r;
  r.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.coeffs[i] = a.coeffs[i] + b.coeffs[i];
  return r;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const std::size_t n = std::min(a.coeffs.size(), b.coeffs.size());
  RationalSeries r;
  r.coeffs.assign(n, Fraction(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return r;
}

RationalSeries exp_substitute(const LaurentPoly& p, unsigned order) {
  if (!p.on_integer_grid()) {
    throw GridViolation("exp substitution needs integer exponents");
  }
  RationalSeries s;
  s.coeffs.assign(order + 1, Fraction(0));
  BigInt factorial = 1;
  for (unsigned m = 0; m <= order; ++m) {
    if (m > 0) factorial *= m;
    BigInt sum = 0;
    for (const auto& [key, c] : p.terms()) {
      BigInt power;
      const BigInt base = key / 2;
      mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), m);
      sum += c * power;
    }
    s.coeffs[m] = Fraction(sum, factorial);
  }
  return s;
}

}  // namespace tbk
