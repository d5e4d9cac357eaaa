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

// Brute-force Kauffman state sum, used only as an independent test oracle.

#pragma once

#include <cstdint>
#include <vector>

#include "tbk/errors.hpp"
#include "tbk/jones.hpp"
#include "tbk/laurent.hpp"
#include "tbk/plat_diagram.hpp"

namespace tbk::oracle {

// <D> = sum over all 2^c states of A^(#A - #B) delta^(circles - 1).
inline LaurentPoly bracket_state_sum(const Diagram& d) {
  const std::size_t c = d.crossing_count();
  if (c > 24) throw InvalidInput("state sum oracle limited to 24 crossings");
  const LaurentPoly delta = -LaurentPoly::term(1, 2) - LaurentPoly::term(1, -2);
  std::vector<LaurentPoly> delta_pow{LaurentPoly(1)};
  LaurentPoly total;
  std::vector<bool> use_a(c);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
    long a_count = 0;
    for (std::size_t i = 0; i < c; ++i) {
      use_a[i] = ((mask >> i) & 1U) != 0;
      a_count += use_a[i] ? 1 : 0;
    }
    const long b_count = static_cast<long>(c) - a_count;
    const int circles = d.state_circles(use_a);
    while (static_cast<int>(delta_pow.size()) < circles) {
      delta_pow.push_back(delta_pow.back() * delta);
    }
    total += LaurentPoly::term(1, a_count - b_count) * delta_pow[circles - 1];
  }
  return total;
}

inline LaurentPoly jones_state_sum(const Diagram& d) {
  return jones_from_bracket(bracket_state_sum(d), d.writhe());
}

}  // namespace tbk::oracle
