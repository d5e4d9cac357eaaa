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

#include "tbk/slopes.hpp"

#include <algorithm>
#include <functional>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

void expand(const Fraction& u, std::vector<long>& prefix,
            std::vector<ContinuedFraction>& out) {
  if (u.is_integer()) {
    if (abs(u.num()) >= 2) {
      prefix.push_back(u.num().get_si());
      out.emplace_back(prefix, Convention::Direct);
      prefix.pop_back();
    }
    return;
  }
  for (const BigInt& a : {u.floor(), u.ceil()}) {
    if (abs(a) < 2) continue;
    if (!a.fits_slong_p()) throw InvalidInput("term exceeds machine range");
    prefix.push_back(a.get_si());
    expand((u - Fraction(a)).reciprocal(), prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<ContinuedFraction> enumerate_expansions(const Fraction& u) {
  if (u.abs() <= Fraction(1)) {
    throw InvalidInput("boundary slope enumeration needs |u| > 1");
  }
  std::vector<ContinuedFraction> out;
  std::vector<long> prefix;
  expand(u, prefix, out);
  return out;
}

long count_pattern_matches(const ContinuedFraction& cf) {
  long n = 0;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    const bool want_positive = i % 2 == 0;
    if ((cf.terms[i] > 0) == want_positive) ++n;
  }
  return n;
}

SlopeSummary slope_records_from_even_cf(const ContinuedFraction& even_cf) {
  if (even_cf.size() == 0 || even_cf.size() % 2 != 0) {
    throw InvalidCF("even expansion must have even length");
  }
  for (long a : even_cf.terms) {
    if (a % 2 != 0) throw InvalidCF("even expansion must have even terms");
  }
  ContinuedFraction direct = even_cf;
  direct.convention = Convention::Direct;
  const Fraction u = eval_cf(direct);
  const BigInt p = abs(u.num());
  const BigInt r = u.sign() > 0 ? u.den() : BigInt(-u.den());
  const BigInt other = r > 0 ? BigInt(r - p) : BigInt(r + p);

  const long n0_plus = count_pattern_matches(even_cf);
  const long n0_diff = n0_plus - (static_cast<long>(even_cf.size()) - n0_plus);

  SlopeSummary s;
  s.s_plus = 0;
  s.s_minus = 0;
  for (const BigInt& rep : {r, other}) {
    for (auto& cf : enumerate_expansions(Fraction(p, rep))) {
      SlopeRecord rec;
      rec.n_plus = count_pattern_matches(cf);
      rec.n_minus = static_cast<long>(cf.size()) - rec.n_plus;
      rec.slope = 2 * ((rec.n_plus - rec.n_minus) - n0_diff);
      rec.weight = 1;
      for (long a : cf.terms) rec.weight *= std::labs(a) - 1;
      rec.expansion = std::move(cf);
      if (rec.slope > 0) s.s_plus += rec.weight;
      if (rec.slope < 0) s.s_minus += rec.weight;
      s.records.push_back(std::move(rec));
    }
  }
  std::sort(s.records.begin(), s.records.end(),
            [](const SlopeRecord& a, const SlopeRecord& b) {
              if (a.slope != b.slope) return a.slope < b.slope;
              if (a.expansion.size() != b.expansion.size()) {
                return a.expansion.size() < b.expansion.size();
              }
              return a.expansion.terms < b.expansion.terms;
            });
  return s;
}

SlopeSummary slope_records(const TwoBridgeKnot& k) {
  return slope_records_from_even_cf(k.even_cf());
}

Fraction casson_difference(const SlopeSummary& s, const Fraction& slope) {
  if (slope.is_zero()) throw InvalidSlope("slope 0 is its own negative");
  const BigInt p = slope.num();
  const BigInt q = slope.den();
  BigInt sum = 0;
  for (const auto& rec : s.records) {
    const BigInt qn = q * rec.slope;
    sum += rec.weight * (abs(p - qn) - abs(-p - qn));
  }
  return Fraction(sum, 4);
}

Fraction casson_difference(const TwoBridgeKnot& k, const Fraction& slope) {
  return casson_difference(slope_records(k), slope);
}

bool in_family_region(long x, long y) { return x > 0 && y < 0 && x + y > 0; }

BigInt s_difference_family(long x, long y) {
  if (!in_family_region(x, y)) {
    throw OutOfRegion("(x, y) outside x > 0, y < 0, x + y > 0");
  }
  const SlopeSummary s = slope_records(family_knot(x, y));
  return s.s_minus - s.s_plus;
}

BigInt s_difference_closed(long x, long y) {
  const BigInt bx = x;
  const BigInt by = y;
  return 2 * (bx + 2 * by) * (4 * bx * bx - 6 * bx + 5);
}

}  // namespace tbk
