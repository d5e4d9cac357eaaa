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

#include "tbk/seifert.hpp"

#include <utility>

#include "tbk/errors.hpp"

namespace tbk {

SeifertData seifert_from_cf(const ContinuedFraction& even_cf) {
  if (even_cf.size() == 0 || even_cf.size() % 2 != 0) {
    throw InvalidCF("Seifert data needs an even-length expansion");
  }
  SeifertData s;
  for (std::size_t i = 0; i < even_cf.size(); ++i) {
    const long a = even_cf.terms[i];
    if (a % 2 != 0) throw InvalidCF("Seifert data needs even terms");
    const long c = a / 2;
    s.diag.push_back(i % 2 == 0 ? c : -c);
  }
  return s;
}

SeifertData seifert_data(const TwoBridgeKnot& k) {
  return seifert_from_cf(k.even_cf());
}

LaurentPoly conway_poly(const SeifertData& s) {
  LaurentPoly prev2;  // D_{-1} = 0
  LaurentPoly prev1(1);
  for (long d : s.diag) {
    LaurentPoly next = LaurentPoly::term(d, 1) * prev1 + prev2;
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

LaurentPoly conway_to_alexander(const LaurentPoly& conway) {
  const LaurentPoly z = t_pow_half(1) - t_pow_half(-1);
  return conway.compose(z);
}

LaurentPoly alexander_poly(const SeifertData& s) {
  return conway_to_alexander(conway_poly(s));
}

int symmetric_signature(std::vector<std::vector<Fraction>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw InvalidInput("matrix is not square");
  }
  int sig = 0;
  std::size_t k = 0;
  while (k < n) {
    if (m[k][k].is_zero()) {
      std::size_t j = k + 1;
      while (j < n && m[j][j].is_zero()) ++j;
      if (j < n) {
        std::swap(m[k], m[j]);
        for (auto& row : m) std::swap(row[k], row[j]);
      } else {
        j = k + 1;
        while (j < n && m[k][j].is_zero()) ++j;
        if (j == n) {
          ++k;
          continue;
        }
        // Row/column k += row/column j makes the pivot 2 m[k][j] != 0.
        for (std::size_t c = 0; c < n; ++c) m[k][c] += m[j][c];
        for (std::size_t r = 0; r < n; ++r) m[r][k] += m[r][j];
      }
    }
    const Fraction pivot = m[k][k];
    sig += pivot.sign();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m[r][k].is_zero()) continue;
      const Fraction f = m[r][k] / pivot;
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (std::size_t r = k + 1; r < n; ++r) m[r][k] = Fraction(0);
    for (std::size_t c = k + 1; c < n; ++c) m[k][c] = Fraction(0);
    ++k;
  }
  return sig;
}

int signature_seifert(const SeifertData& s) {
  const std::size_t n = s.diag.size();
  BigInt prev2 = 0;
  BigInt prev1 = 1;
  int sig = 0;
  bool degenerate = false;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt next = 2 * s.diag[i] * prev1 - (i == 0 ? BigInt(0) : prev2);
    if (next == 0) {
      degenerate = true;
      break;
    }
    sig += (sgn(next) == sgn(prev1)) ? 1 : -1;
    prev2 = prev1;
    prev1 = next;
  }
  if (!degenerate) return sig;
  std::vector<std::vector<Fraction>> m(n, std::vector<Fraction>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = Fraction(2 * s.diag[i]);
    if (i + 1 < n) {
      m[i][i + 1] = Fraction(1);
      m[i + 1][i] = Fraction(1);
    }
  }
  return symmetric_signature(std::move(m));
}

int genus_alternating(const LaurentPoly& alexander) {
  if (alexander.is_zero() || alexander.max_half() == alexander.min_half()) {
    throw DegenerateAlexander("Alexander polynomial is constant");
  }
  return static_cast<int>((alexander.max_half() - alexander.min_half()) / 4);
}

bool is_fibered_alternating(const LaurentPoly& alexander) {
  const BigInt lead = alexander.leading();
  return lead == 1 || lead == -1;
}

BigInt determinant(const LaurentPoly& alexander) {
  return abs(alexander.value_at_minus_one());
}

}  // namespace tbk
