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

#include "tbk/jones.hpp"

#include <cstdlib>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

LaurentPoly a_pow(long e) { return LaurentPoly::term(1, e); }

LaurentPoly delta() { return -a_pow(2) - a_pow(-2); }

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
  auto q = divides_exactly(num, den);
  if (!q) throw ValidationError("closed form division is not exact");
  return *q;
}

// t + 1 + t^-1.
LaurentPoly trinomial() { return t_pow(1) + 1 + t_pow(-1); }

}  // namespace

BracketState apply_twist(const BracketState& s, const TwistRegion& region) {
  const bool over02 = twist_over02(region.position, region.count);
  const LaurentPoly d = delta();
  BracketState cur = s;
  for (long j = 0; j < std::labs(region.count); ++j) {
    BracketState next;
    if (region.position == TwistPosition::Horizontal) {
      const LaurentPoly w_pass = over02 ? a_pow(-1) : a_pow(1);
      const LaurentPoly w_turn = over02 ? a_pow(1) : a_pow(-1);
      next.v0 = w_pass * cur.v0;
      next.vinf = w_pass * cur.vinf + w_turn * (cur.v0 + d * cur.vinf);
    } else {
      const LaurentPoly w_pass = over02 ? a_pow(1) : a_pow(-1);
      const LaurentPoly w_cap = over02 ? a_pow(-1) : a_pow(1);
      next.v0 = w_pass * cur.v0 + w_cap * (d * cur.v0 + cur.vinf);
      next.vinf = w_pass * cur.vinf;
    }
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly bracket_plat(const ContinuedFraction& cf) {
  if (cf.size() == 0) throw InvalidCF("empty continued fraction");
  const std::size_t k = cf.size();
  BracketState s;
  if (k % 2 == 1) {
    s.v0 = LaurentPoly(1);
  } else {
    s.vinf = LaurentPoly(1);
  }
  for (std::size_t i = k; i-- > 0;) {
    const TwistRegion region{
        i % 2 == 0 ? TwistPosition::Horizontal : TwistPosition::Vertical,
        cf.terms[i]};
    if (region.count == 0) throw InvalidCF("continued fraction with a zero term");
    s = apply_twist(s, region);
  }
  return s.v0 * delta() + s.vinf;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly factor = a_pow(-3L * writhe);
  if (writhe % 2 != 0) factor = -factor;
  return (factor * bracket).substitute_power(Fraction(-1, 4));
}

JonesResult jones_plat(const ContinuedFraction& cf) {
  const PlatDiagram plat = build_plat_signed(cf);
  JonesResult r;
  r.writhe = plat.diagram.writhe();
  r.V = jones_from_bracket(bracket_plat(cf), r.writhe);
  return r;
}

JonesResult jones_two_bridge(const TwoBridgeKnot& k) {
  return jones_plat(positive_rewrite(k.even_cf()));
}

LaurentPoly jones_torus_2m(long m) {
  if (m == 0) throw InvalidInput("T(2, 0) is the split unlink");
  if (m % 2 != 0) throw NotALink("T(2, m) with m odd is a knot");
  const long k = std::labs(m);
  const LaurentPoly num = -t_pow_half(1) * (t_pow(k) * trinomial() + 1);
  const LaurentPoly v = exact_div(num, t_pow(1) + 1);
  return m < 0 ? v : v.mirror_var();
}

FamilyPieces jones_family_pieces(long n) {
  if (n <= 0) throw InvalidInput("family index n must be positive");
  const LaurentPoly sym = (t_pow(1) + 1) * (t_pow(-1) + 1);
  const LaurentPoly tail = t_pow(-4 * n) * trinomial() + 1;
  FamilyPieces out;
  out.c_minus =
      t_pow(-2 * n) + exact_div((LaurentPoly(1) - t_pow(-2 * n)) * tail, sym);
  out.c_plus =
      t_pow(2 * n) + exact_div((LaurentPoly(1) - t_pow(2 * n)) * tail, sym);
  out.l_n = out.c_minus * jones_torus_2m(-4 * n);
  return out;
}

LaurentPoly jones_family_skein(long n) {
  const FamilyPieces p = jones_family_pieces(n);
  const LaurentPoly coeff =
      exact_div(t_pow_half(1) * (LaurentPoly(1) - t_pow(2 * n)), t_pow(1) + 1);
  return t_pow(2 * n) * p.c_plus - coeff * p.l_n;
}

LaurentPoly jones_family_closed(long n) {
  if (n <= 0) throw InvalidInput("family index n must be positive");
  const LaurentPoly a = LaurentPoly(1) - t_pow(2 * n);
  const LaurentPoly b = LaurentPoly(1) - t_pow(-2 * n);
  const LaurentPoly c = t_pow(2 * n) - t_pow(-2 * n);
  const LaurentPoly sym = (t_pow(1) + 1) * (t_pow(-1) + 1);
  return LaurentPoly(1) + exact_div(a * b * c * c * trinomial(), sym * sym);
}

Fraction jones_h_coefficient(const LaurentPoly& v, unsigned k) {
  return exp_substitute(v, k)[k];
}

Fraction j4(const LaurentPoly& v) { return jones_h_coefficient(v, 4); }

LaurentPoly jones_connected_sum(const LaurentPoly& a, const LaurentPoly& b) {
  return a * b;
}

}  // namespace tbk
