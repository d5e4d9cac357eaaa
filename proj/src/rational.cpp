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

#include "tbk/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tbk/errors.hpp"

namespace tbk {

std::string to_string(const BigInt& value) { return value.get_str(); }

Fraction::Fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero("fraction with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Fraction Fraction::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Fraction(BigInt(text));
    return Fraction(BigInt(text.substr(0, slash)),
                    BigInt(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed fraction '" + text + "'");
  }
}

Fraction Fraction::abs() const {
  Fraction r = *this;
  r.value_ = ::abs(value_);
  return r;
}

Fraction Fraction::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero");
  return Fraction(den(), num());
}

BigInt Fraction::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

BigInt Fraction::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return r;
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.value_ = -value_;
  return r;
}

Fraction& Fraction::operator+=(const Fraction& rhs) {
  value_ += rhs.value_;
  return *this;
}

Fraction& Fraction::operator-=(const Fraction& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Fraction& Fraction::operator*=(const Fraction& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Fraction::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.str();
}

ContinuedFraction::ContinuedFraction(std::vector<long> t, Convention c)
    : terms(std::move(t)), convention(c) {
  if (std::find(terms.begin(), terms.end(), 0L) != terms.end()) {
    throw InvalidCF("continued fraction with a zero term");
  }
}

ContinuedFraction ContinuedFraction::negated() const {
  ContinuedFraction r = *this;
  for (long& a : r.terms) a = -a;
  return r;
}

ContinuedFraction ContinuedFraction::reversed() const {
  ContinuedFraction r = *this;
  std::reverse(r.terms.begin(), r.terms.end());
  return r;
}

std::string ContinuedFraction::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << ',';
    os << terms[i];
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ContinuedFraction& cf) {
  return os << cf.str();
}

ContinuedFraction parse_cf(const std::string& text, Convention convention) {
  std::vector<long> terms;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      throw InvalidCF("malformed continued fraction '" + text + "'");
    }
    if (used != item.size()) {
      throw InvalidCF("malformed continued fraction '" + text + "'");
    }
    terms.push_back(value);
  }
  if (terms.empty()) throw InvalidCF("empty continued fraction");
  return ContinuedFraction(std::move(terms), convention);
}

Fraction eval_cf(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw InvalidCF("empty continued fraction");
  // Innermost tail first.
  Fraction tail(cf.terms.back());
  for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) {
    if (tail.is_zero()) {
      throw DivisionByZero("continued fraction tail evaluates to 0");
    }
    tail = Fraction(*it) + tail.reciprocal();
  }
  if (cf.convention == Convention::Direct) return tail;
  if (tail.is_zero()) {
    throw DivisionByZero("continued fraction evaluates to 1/0");
  }
  return tail.reciprocal();
}

namespace {

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw InvalidInput("term exceeds machine range");
  return v.get_si();
}

// Nearest even integer a with |u - a| < 1. u must not be an odd integer.
BigInt nearest_even(const Fraction& u) {
  BigInt f = u.floor();
  if (f % 2 == 0) return f;
  return f + 1;
}

}  // namespace

ContinuedFraction even_expansion(const Fraction& f) {
  if (f.den() % 2 == 0) throw NotAKnot("even denominator: two-bridge link");
  if (f.is_zero() || f.abs() >= Fraction(1)) {
    throw InvalidFraction("even expansion needs 0 < |q/p| < 1");
  }
  if (f.num() % 2 != 0) {
    throw InvalidFraction("even expansion needs an even numerator");
  }
  std::vector<long> terms;
  Fraction u = f.reciprocal();  // odd/even, never an integer
  while (true) {
    if (u.is_integer()) {
      if (u.num() % 2 != 0) throw NotAKnot("odd integer tail: link");
      terms.push_back(to_long(u.num()));
      break;
    }
    const BigInt a = nearest_even(u);
    terms.push_back(to_long(a));
    u = (u - Fraction(a)).reciprocal();
  }
  return ContinuedFraction(std::move(terms), Convention::Inverse);
}

ContinuedFraction positive_expansion(const Fraction& f) {
  if (f.is_zero() || f.abs() > Fraction(1)) {
    throw InvalidFraction("positive expansion needs 0 < |f| <= 1");
  }
  std::vector<long> terms;
  Fraction u = f.abs().reciprocal();
  while (true) {
    const BigInt a = u.floor();
    terms.push_back(to_long(a));
    if (u.is_integer()) break;
    u = (u - Fraction(a)).reciprocal();
  }
  ContinuedFraction cf(std::move(terms), Convention::Inverse);
  return f.sign() < 0 ? cf.negated() : cf;
}

ContinuedFraction TwoBridgeKnot::even_cf() const {
  return mirrored_ ? canonical_cf_.negated() : canonical_cf_;
}

Fraction TwoBridgeKnot::fraction() const {
  return Fraction(mirrored_ ? BigInt(-q_) : q_, p_);
}

std::optional<FamilyParams> TwoBridgeKnot::family() const {
  const auto cf = even_cf();
  if (cf.size() != 4) return std::nullopt;
  const long c1 = cf.terms[0] / 2;
  const long c2 = cf.terms[1] / 2;
  const long c3 = cf.terms[2] / 2;
  const long c4 = cf.terms[3] / 2;
  if (c1 != c4 || c2 + c3 != -c1) return std::nullopt;
  // [2x, 2y, -2(x+y), 2x] and [-2x, 2(x+y), ...] describe the same knot.
  FamilyParams params;
  if (c1 > 0) {
    params.x = c1;
    params.y = c2;
  } else {
    params.x = -c1;
    params.y = c1 + c2;
  }
  if (params.x == -2 * params.y) params.n = -params.y;
  return params;
}

std::string TwoBridgeKnot::name() const {
  std::string s = "b(" + p_.get_str() + "," + q_.get_str() + ")";
  if (mirrored_) s += "*";
  return s;
}

TwoBridgeKnot normalize(const BigInt& p, const BigInt& q) {
  if (p % 2 == 0) throw NotAKnot("p = " + p.get_str() + " is even: not a knot");
  if (p < 3) throw InvalidFraction("p must be at least 3");
  BigInt r;
  mpz_mod(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (r == 0) throw InvalidFraction("q = 0 mod p");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
  if (g != 1) throw InvalidFraction("gcd(p, q) != 1");
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());

  const BigInt direct[2] = {r, inv};
  const BigInt mirror_set[2] = {p - r, p - inv};
  std::optional<BigInt> best;
  bool best_mirrored = false;
  auto consider = [&](const BigInt& c, bool is_mirror) {
    if (c % 2 != 0) return;
    if (!best || c < *best) {
      best = c;
      best_mirrored = is_mirror;
    }
  };
  for (const auto& c : direct) consider(c, false);
  for (const auto& c : mirror_set) consider(c, true);
  // One of r and p - r is always even, so best is set.
  TwoBridgeKnot k;
  k.p_ = p;
  k.q_ = *best;
  k.mirrored_ = best_mirrored;
  k.canonical_cf_ = even_expansion(Fraction(k.q_, k.p_));
  return k;
}

TwoBridgeKnot knot_from_cf(const ContinuedFraction& cf) {
  ContinuedFraction inv = cf;
  inv.convention = Convention::Inverse;
  return knot_from_fraction(eval_cf(inv));
}

TwoBridgeKnot knot_from_fraction(const Fraction& f) {
  return normalize(f.den(), f.num());
}

TwoBridgeKnot family_knot(long x, long y) {
  if (x == 0 || y == 0 || x + y == 0) {
    throw InvalidInput("family parameters need x, y, x+y nonzero");
  }
  return knot_from_cf(ContinuedFraction({2 * x, 2 * y, -2 * (x + y), 2 * x}));
}

TwoBridgeKnot family_knot_n(long n) {
  if (n <= 0) throw InvalidInput("family index n must be positive");
  return family_knot(2 * n, -n);
}

bool is_amphichiral(const TwoBridgeKnot& k) {
  const BigInt s = k.q() * k.q() + 1;
  return s % k.p() == 0;
}

TwoBridgeKnot mirror(const TwoBridgeKnot& k) {
  TwoBridgeKnot m = k;
  if (is_amphichiral(k)) return m;
  m.mirrored_ = !k.mirrored_;
  return m;
}

std::vector<TwoBridgeKnot> canonical_knots(long max_p) {
  std::vector<TwoBridgeKnot> out;
  for (long p = 3; p <= max_p; p += 2) {
    for (long q = 2; q < p; q += 2) {
      if (std::gcd(p, q) != 1) continue;
      TwoBridgeKnot k = normalize(p, q);
      if (k.q() == q && !k.mirrored()) out.push_back(std::move(k));
    }
  }
  return out;
}

}  // namespace tbk
