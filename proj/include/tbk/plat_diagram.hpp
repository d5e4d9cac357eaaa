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

// Planar link diagrams and the 4-plat closure of a continued fraction.
//
// A crossing has four slots numbered counter-clockwise. The over strand runs
// through slots 0 and 2 when `over02` is set, otherwise through 1 and 3.
// Slot endpoints are numbered 4c + s; `partner` pairs every endpoint with the
// endpoint at the other end of its edge. Orientation is stored per endpoint
// as an incoming flag.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "tbk/rational.hpp"

namespace tbk {

struct Crossing {
  bool over02 = true;
};

class Diagram {
 public:
  Diagram() = default;

  // Builds a diagram from PD tuples X[i,j,k,l]: edge labels listed
  // counter-clockwise starting from the incoming under edge. Every label
  // must occur exactly twice. Orientation follows the PD convention.
  static Diagram from_pd(const std::vector<std::array<int, 4>>& pd);

  std::size_t crossing_count() const { return crossings_.size(); }
  int free_loops() const { return free_loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int partner(int endpoint) const { return partner_[endpoint]; }
  bool incoming(int endpoint) const { return incoming_[endpoint] != 0; }

  int component_count() const;
  // Component index of each endpoint (free loops excluded).
  std::vector<int> component_of_endpoints() const;

  // +1 or -1 for each crossing under the current orientation.
  std::vector<int> crossing_signs() const;
  int writhe() const;

  // Circle count of the Kauffman state choosing the A-smoothing at crossing
  // i iff use_a[i]. The A-smoothing joins the regions swept when the over
  // strand turns counter-clockwise.
  int state_circles(const std::vector<bool>& use_a) const;
  int all_a_circles() const;
  int all_b_circles() const;

  // Over and under passes alternate along every component.
  bool is_alternating() const;

  // Crossing change at i (orientation kept).
  Diagram switched(std::size_t i) const;
  // Orientation-respecting smoothing of crossing i.
  Diagram smoothed(std::size_t i) const;
  // Reverses the orientation of one component.
  Diagram reversed_component(int component) const;
  // Mirror image: every crossing switched.
  Diagram mirrored() const;

  // PD tuples with edges labelled 1..E along the orientation, component by
  // component.
  std::vector<std::array<int, 4>> pd_code() const;
  // One "X[i,j,k,l]" line per crossing.
  std::string pd_text() const;

 private:
  friend class DiagramBuilder;

  // Orients every component by walking from its lowest endpoint.
  void orient_default();

  std::vector<Crossing> crossings_;
  std::vector<int> partner_;
  std::vector<char> incoming_;
  int free_loops_ = 0;
};

enum class TwistPosition { Horizontal, Vertical };

struct TwistRegion {
  TwistPosition position = TwistPosition::Horizontal;
  long count = 0;  // signed; negative twists use the other crossing type
};

struct PlatDiagram {
  std::vector<TwistRegion> regions;
  Diagram diagram;
};

// Whether the over strand of a crossing in a twist region of the given
// position and sign runs through slots 0 and 2.
bool twist_over02(TwistPosition position, long count);

// The 4-plat closure for an Inverse expansion with arbitrary nonzero terms.
// Odd indices are horizontal twist regions, even indices vertical.
PlatDiagram build_plat_signed(const ContinuedFraction& cf);

// The reduced alternating 4-plat diagram. Throws InvalidCF unless every term
// is positive.
PlatDiagram build_plat(const ContinuedFraction& cf_positive);

// All-positive Inverse expansion of the same fraction class: q/p is reduced
// to (0, 1) modulo 1 and expanded with positive partial quotients.
ContinuedFraction positive_rewrite(const ContinuedFraction& cf);

// The reduced alternating diagram of K with K's chirality.
PlatDiagram plat_for_knot(const TwoBridgeKnot& k);

// o(D).
int all_A_circles(const PlatDiagram& d);
// y(D). Throws MultiComponent unless D is a knot diagram.
int positive_crossings(const PlatDiagram& d);
// o(D) - y(D) - 1.
int signature_traczyk(const PlatDiagram& d);

}  // namespace tbk
