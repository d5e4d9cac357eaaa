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

// Exact rationals, continued fractions and two-bridge knot normalization.
//
// Continued fractions come in two evaluation conventions:
//   Inverse  [a1, ..., ak] = 1/(a1 + 1/(a2 + ... + 1/ak))
//   Direct   [a1, ..., ak] = a1 + 1/(a2 + ... + 1/ak)
// Knots are described by Inverse expansions; boundary-slope enumeration works
// with Direct ones.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace tbk {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

// Exact rational in lowest terms with a positive denominator.
class Fraction {
 public:
  Fraction() = default;
  Fraction(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Fraction(const BigInt& value) : value_(value) {}  // NOLINT
  Fraction(const BigInt& num, const BigInt& den);

  static Fraction parse(const std::string& text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Fraction abs() const;
  Fraction reciprocal() const;
  BigInt floor() const;
  BigInt ceil() const;

  Fraction operator-() const;
  Fraction& operator+=(const Fraction& rhs);
  Fraction& operator-=(const Fraction& rhs);
  Fraction& operator*=(const Fraction& rhs);
  Fraction& operator/=(const Fraction& rhs);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a,
                                          const Fraction& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  // "num/den", or just "num" for integers.
  std::string str() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

enum class Convention { Inverse, Direct };

struct ContinuedFraction {
  std::vector<long> terms;
  Convention convention = Convention::Inverse;

  ContinuedFraction() = default;
  ContinuedFraction(std::vector<long> t, Convention c = Convention::Inverse);

  std::size_t size() const { return terms.size(); }
  ContinuedFraction negated() const;
  ContinuedFraction reversed() const;
  std::string str() const;

  friend bool operator==(const ContinuedFraction&,
                         const ContinuedFraction&) = default;
};

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf);

// Parses "a1,a2,...". Throws InvalidCF on malformed text or zero terms.
ContinuedFraction parse_cf(const std::string& text,
                           Convention convention = Convention::Inverse);

// Exact value. Throws DivisionByZero when a tail that must be inverted is 0.
Fraction eval_cf(const ContinuedFraction& cf);

// The all-even Inverse expansion of q/p (p odd, 0 < |q| < p). Every term is
// even with absolute value >= 2 and the length is even. Throws NotAKnot if
// the denominator is even.
ContinuedFraction even_expansion(const Fraction& f);

// Regular Inverse expansion with positive terms of |f| for 0 < |f| <= 1,
// terms negated when f < 0. The last term is >= 2 unless |f| = 1.
ContinuedFraction positive_expansion(const Fraction& f);

// Parameters of the family with even expansion [2x, 2y, -2(x+y), 2x], x > 0,
// for this chirality. n is set when x = -2y, i.e. the knot is
// C[4n, -2n, -2n, 4n].
struct FamilyParams {
  long x = 0;
  long y = 0;
  std::optional<long> n;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

// A two-bridge knot b(p, q) up to orientation of the knot itself. The
// unordered class {q, q^-1, -q, -q^-1} mod p is represented by its smallest
// even member in (0, p); `mirrored` says whether this knot is b(p, -q) rather
// than b(p, q) for that canonical q.
class TwoBridgeKnot {
 public:
  BigInt p() const { return p_; }
  BigInt q() const { return q_; }
  bool mirrored() const { return mirrored_; }

  // Even expansion of q/p (canonical, ignoring chirality).
  const ContinuedFraction& canonical_cf() const { return canonical_cf_; }
  // Even expansion describing this knot with its chirality: the canonical
  // one, negated when mirrored.
  ContinuedFraction even_cf() const;
  // Signed value of even_cf(): q/p or -q/p.
  Fraction fraction() const;

  std::optional<FamilyParams> family() const;

  std::string name() const;

  friend bool operator==(const TwoBridgeKnot& a, const TwoBridgeKnot& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && a.mirrored_ == b.mirrored_;
  }

 private:
  friend TwoBridgeKnot normalize(const BigInt& p, const BigInt& q);
  friend TwoBridgeKnot mirror(const TwoBridgeKnot& k);

  BigInt p_;
  BigInt q_;
  bool mirrored_ = false;
  ContinuedFraction canonical_cf_;
};

// Canonical representative of b(p, q). Throws NotAKnot for even p,
// InvalidFraction when gcd(p, q) != 1, q = 0 mod p or p < 3.
TwoBridgeKnot normalize(const BigInt& p, const BigInt& q);

// The knot whose Inverse expansion is `cf` (any terms, any parity).
TwoBridgeKnot knot_from_cf(const ContinuedFraction& cf);

// Same as normalize(f.den(), f.num()).
TwoBridgeKnot knot_from_fraction(const Fraction& f);

// The family member with even expansion [2x, 2y, -2(x+y), 2x].
TwoBridgeKnot family_knot(long x, long y);

// C[4n, -2n, -2n, 4n].
TwoBridgeKnot family_knot_n(long n);

// q^2 = -1 (mod p).
bool is_amphichiral(const TwoBridgeKnot& k);

// Flips the chirality flag, except for amphichiral knots, which are their
// own mirror image. An involution.
TwoBridgeKnot mirror(const TwoBridgeKnot& k);

// Every canonical (unmirrored) knot with 3 <= p <= max_p, ordered by (p, q).
std::vector<TwoBridgeKnot> canonical_knots(long max_p);

}  // namespace tbk
