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

#include "tbk/plat_diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "tbk/errors.hpp"

namespace tbk {

namespace {

constexpr char kUnset = 2;

// Crossing type of a positive twist in each position; negative twists use
// the opposite type.
constexpr bool kHorizontalPositiveOver02 = false;
constexpr bool kVerticalPositiveOver02 = false;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  int roots() {
    int r = 0;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(static_cast<int>(i)) == static_cast<int>(i)) ++r;
    }
    return r;
  }

 private:
  std::vector<int> parent_;
};

int slot_of(int endpoint) { return endpoint % 4; }
int crossing_of(int endpoint) { return endpoint / 4; }
int endpoint(int crossing, int slot) { return 4 * crossing + (slot % 4); }

bool is_over(const Crossing& x, int slot) {
  return x.over02 ? slot % 2 == 0 : slot % 2 == 1;
}

// Resolves token endpoints (ids with join[id] >= 0) out of `partner`: each
// kept endpoint is re-paired with the kept endpoint reached by alternating
// partner and join links. Returns the number of closed loops made of tokens
// only.
int splice(std::vector<int>& partner, const std::vector<int>& join,
           int kept) {
  std::vector<char> seen(partner.size(), 0);
  std::vector<int> result(kept, -1);
  for (int x = 0; x < kept; ++x) {
    int y = partner[x];
    while (y >= kept) {
      seen[y] = 1;
      const int z = join[y];
      seen[z] = 1;
      y = partner[z];
    }
    result[x] = y;
  }
  int loops = 0;
  for (int t = kept; t < static_cast<int>(partner.size()); ++t) {
    if (seen[t]) continue;
    ++loops;
    int y = t;
    do {
      seen[y] = 1;
      const int z = join[y];
      seen[z] = 1;
      y = partner[z];
    } while (y != t);
  }
  partner = std::move(result);
  return loops;
}

}  // namespace

class DiagramBuilder {
 public:
  static Diagram make(std::vector<Crossing> crossings, std::vector<int> partner,
                      int free_loops) {
    Diagram d;
    d.crossings_ = std::move(crossings);
    d.partner_ = std::move(partner);
    d.free_loops_ = free_loops;
    d.orient_default();
    return d;
  }

  // Removes crossing c, joining its slots in the two given pairs.
  static Diagram remove_crossing(const Diagram& d, std::size_t c,
                                 std::pair<int, int> j1,
                                 std::pair<int, int> j2) {
    const int n = static_cast<int>(d.crossings_.size());
    const int ci = static_cast<int>(c);
    // Move crossing c to the end so its endpoints become the token range.
    auto remap = [&](int e) {
      const int x = crossing_of(e);
      const int s = slot_of(e);
      if (x == ci) return endpoint(n - 1, s);
      return endpoint(x > ci ? x - 1 : x, s);
    };
    std::vector<int> partner(4 * n);
    std::vector<char> incoming(4 * n);
    for (int e = 0; e < 4 * n; ++e) {
      partner[remap(e)] = remap(d.partner_[e]);
      incoming[remap(e)] = d.incoming_[e];
    }
    std::vector<int> join(4 * n, -1);
    const int base = 4 * (n - 1);
    join[base + j1.first] = base + j1.second;
    join[base + j1.second] = base + j1.first;
    join[base + j2.first] = base + j2.second;
    join[base + j2.second] = base + j2.first;
    Diagram out;
    out.free_loops_ = d.free_loops_ + splice(partner, join, base);
    out.partner_ = std::move(partner);
    incoming.resize(base);
    out.incoming_ = std::move(incoming);
    for (int x = 0; x < n; ++x) {
      if (x != ci) out.crossings_.push_back(d.crossings_[x]);
    }
    return out;
  }

  static void set_incoming(Diagram& d, std::vector<char> incoming) {
    d.incoming_ = std::move(incoming);
  }
};

Diagram Diagram::from_pd(const std::vector<std::array<int, 4>>& pd) {
  const int n = static_cast<int>(pd.size());
  std::map<int, std::vector<int>> where;
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) where[pd[c][s]].push_back(endpoint(c, s));
  }
  std::vector<int> partner(4 * n, -1);
  for (const auto& [label, ends] : where) {
    if (ends.size() != 2) {
      throw ParseError("PD label " + std::to_string(label) +
                       " does not occur exactly twice");
    }
    partner[ends[0]] = ends[1];
    partner[ends[1]] = ends[0];
  }
  Diagram d;
  d.crossings_.assign(n, Crossing{false});
  d.partner_ = std::move(partner);
  d.incoming_.assign(4 * n, kUnset);
  // Under strands enter at slot 0; propagate along each strand.
  for (int c = 0; c < n; ++c) {
    int in = endpoint(c, 0);
    while (d.incoming_[in] == kUnset) {
      d.incoming_[in] = 1;
      const int out = endpoint(crossing_of(in), slot_of(in) + 2);
      d.incoming_[out] = 0;
      in = d.partner_[out];
    }
  }
  for (char f : d.incoming_) {
    if (f == kUnset) d.orient_default();
  }
  return d;
}

void Diagram::orient_default() {
  const int total = static_cast<int>(partner_.size());
  incoming_.assign(total, kUnset);
  for (int x = 0; x < total; ++x) {
    if (incoming_[x] != kUnset) continue;
    int out = x;
    while (incoming_[out] == kUnset) {
      incoming_[out] = 0;
      const int in = partner_[out];
      incoming_[in] = 1;
      out = endpoint(crossing_of(in), slot_of(in) + 2);
    }
  }
}

std::vector<int> Diagram::component_of_endpoints() const {
  const int total = static_cast<int>(partner_.size());
  UnionFind uf(total);
  for (int e = 0; e < total; ++e) {
    uf.unite(e, partner_[e]);
    uf.unite(e, endpoint(crossing_of(e), slot_of(e) + 2));
  }
  std::map<int, int> ids;
  std::vector<int> out(total);
  for (int e = 0; e < total; ++e) {
    auto [it, inserted] =
        ids.try_emplace(uf.find(e), static_cast<int>(ids.size()));
    out[e] = it->second;
  }
  return out;
}

int Diagram::component_count() const {
  const auto comp = component_of_endpoints();
  int n = 0;
  for (int c : comp) n = std::max(n, c + 1);
  return n + free_loops_;
}

std::vector<int> Diagram::crossing_signs() const {
  std::vector<int> signs;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const Crossing& x = crossings_[c];
    const int ci = static_cast<int>(c);
    const int u = x.over02 ? 1 : 0;
    const int a = incoming_[endpoint(ci, u)] ? u : u + 2;
    const int o = x.over02 ? 0 : 1;
    const int b = incoming_[endpoint(ci, o)] ? o : o + 2;
    signs.push_back(b == (a + 3) % 4 ? 1 : -1);
  }
  return signs;
}

int Diagram::writhe() const {
  const auto s = crossing_signs();
  return std::accumulate(s.begin(), s.end(), 0);
}

int Diagram::state_circles(const std::vector<bool>& use_a) const {
  const int total = static_cast<int>(partner_.size());
  UnionFind uf(total);
  for (int e = 0; e < total; ++e) uf.unite(e, partner_[e]);
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const int ci = static_cast<int>(c);
    const int b = crossings_[c].over02 ? 0 : 1;
    if (use_a[c]) {
      uf.unite(endpoint(ci, b + 1), endpoint(ci, b + 2));
      uf.unite(endpoint(ci, b + 3), endpoint(ci, b));
    } else {
      uf.unite(endpoint(ci, b), endpoint(ci, b + 1));
      uf.unite(endpoint(ci, b + 2), endpoint(ci, b + 3));
    }
  }
  return uf.roots() + free_loops_;
}

int Diagram::all_a_circles() const {
  return state_circles(std::vector<bool>(crossings_.size(), true));
}

int Diagram::all_b_circles() const {
  return state_circles(std::vector<bool>(crossings_.size(), false));
}

bool Diagram::is_alternating() const {
  const int total = static_cast<int>(partner_.size());
  std::vector<char> seen(total, 0);
  for (int start = 0; start < total; ++start) {
    if (!incoming_[start] || seen[start]) continue;
    int in = start;
    bool prev = is_over(crossings_[crossing_of(in)], slot_of(in));
    do {
      seen[in] = 1;
      const int out = endpoint(crossing_of(in), slot_of(in) + 2);
      in = partner_[out];
      const bool now = is_over(crossings_[crossing_of(in)], slot_of(in));
      if (now == prev) return false;
      prev = now;
    } while (in != start);
  }
  return true;
}

Diagram Diagram::switched(std::size_t i) const {
  if (i >= crossings_.size()) throw InvalidInput("crossing index out of range");
  Diagram d = *this;
  d.crossings_[i].over02 = !d.crossings_[i].over02;
  return d;
}

Diagram Diagram::smoothed(std::size_t i) const {
  if (i >= crossings_.size()) throw InvalidInput("crossing index out of range");
  const int ci = static_cast<int>(i);
  const Crossing& x = crossings_[i];
  const int u = x.over02 ? 1 : 0;
  const int a = incoming_[endpoint(ci, u)] ? u : u + 2;
  const int o = x.over02 ? 0 : 1;
  const int b = incoming_[endpoint(ci, o)] ? o : o + 2;
  return DiagramBuilder::remove_crossing(*this, i, {a, (b + 2) % 4},
                                         {b, (a + 2) % 4});
}

Diagram Diagram::reversed_component(int component) const {
  const auto comp = component_of_endpoints();
  std::vector<char> incoming = incoming_;
  bool found = false;
  for (std::size_t e = 0; e < comp.size(); ++e) {
    if (comp[e] == component) {
      incoming[e] = incoming[e] ? 0 : 1;
      found = true;
    }
  }
  if (!found) throw InvalidInput("no such component");
  Diagram d = *this;
  DiagramBuilder::set_incoming(d, std::move(incoming));
  return d;
}

Diagram Diagram::mirrored() const {
  Diagram d = *this;
  for (auto& x : d.crossings_) x.over02 = !x.over02;
  return d;
}

std::vector<std::array<int, 4>> Diagram::pd_code() const {
  const int total = static_cast<int>(partner_.size());
  std::vector<int> label(total, 0);
  int next = 1;
  for (int start = 0; start < total; ++start) {
    if (incoming_[start] || label[start]) continue;
    int out = start;
    while (!label[out]) {
      const int in = partner_[out];
      label[out] = next;
      label[in] = next;
      ++next;
      out = endpoint(crossing_of(in), slot_of(in) + 2);
    }
  }
  std::vector<std::array<int, 4>> pd;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const int ci = static_cast<int>(c);
    const int u = crossings_[c].over02 ? 1 : 0;
    const int a = incoming_[endpoint(ci, u)] ? u : u + 2;
    pd.push_back({label[endpoint(ci, a)], label[endpoint(ci, a + 1)],
                  label[endpoint(ci, a + 2)], label[endpoint(ci, a + 3)]});
  }
  return pd;
}

std::string Diagram::pd_text() const {
  std::ostringstream os;
  for (const auto& x : pd_code()) {
    os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << "]\n";
  }
  return os.str();
}

bool twist_over02(TwistPosition position, long count) {
  const bool base = position == TwistPosition::Horizontal
                        ? kHorizontalPositiveOver02
                        : kVerticalPositiveOver02;
  return count > 0 ? base : !base;
}

PlatDiagram build_plat_signed(const ContinuedFraction& cf) {
  if (cf.size() == 0) throw InvalidCF("empty continued fraction");
  const int k = static_cast<int>(cf.size());
  long n_long = 0;
  for (long a : cf.terms) {
    if (a == 0) throw InvalidCF("continued fraction with a zero term");
    n_long += std::labs(a);
  }
  const int n = static_cast<int>(n_long);
  enum { NW = 0, NE = 1, SW = 2, SE = 3 };
  const int tok = 4 * n;
  std::vector<int> partner(4 * n + 4, -1);
  auto link = [&](int x, int y) {
    partner[x] = y;
    partner[y] = x;
  };
  if (k % 2 == 1) {
    link(tok + NW, tok + NE);
    link(tok + SW, tok + SE);
  } else {
    link(tok + NW, tok + SW);
    link(tok + NE, tok + SE);
  }

  PlatDiagram plat;
  std::vector<Crossing> crossings;
  for (int i = k - 1; i >= 0; --i) {
    const long a = cf.terms[i];
    const bool horizontal = i % 2 == 0;
    plat.regions.push_back({horizontal ? TwistPosition::Horizontal
                                       : TwistPosition::Vertical,
                            a});
    const bool over02 = twist_over02(plat.regions.back().position, a);
    for (long j = 0; j < std::labs(a); ++j) {
      const int c = 4 * static_cast<int>(crossings.size());
      crossings.push_back(Crossing{over02});
      if (horizontal) {
        const int x = partner[tok + NE];
        const int y = partner[tok + SE];
        if (x == tok + SE) {
          link(c + 1, c + 2);
        } else {
          link(x, c + 1);
          link(y, c + 2);
        }
        link(c + 0, tok + NE);
        link(c + 3, tok + SE);
      } else {
        const int x = partner[tok + SE];
        const int y = partner[tok + SW];
        if (x == tok + SW) {
          link(c + 0, c + 1);
        } else {
          link(x, c + 0);
          link(y, c + 1);
        }
        link(c + 2, tok + SW);
        link(c + 3, tok + SE);
      }
    }
  }
  std::reverse(plat.regions.begin(), plat.regions.end());

  std::vector<int> join(4 * n + 4, -1);
  join[tok + NW] = tok + NE;
  join[tok + NE] = tok + NW;
  join[tok + SW] = tok + SE;
  join[tok + SE] = tok + SW;
  const int loops = splice(partner, join, tok);
  plat.diagram =
      DiagramBuilder::make(std::move(crossings), std::move(partner), loops);
  return plat;
}

PlatDiagram build_plat(const ContinuedFraction& cf_positive) {
  for (long a : cf_positive.terms) {
    if (a <= 0) throw InvalidCF("build_plat needs positive terms");
  }
  return build_plat_signed(cf_positive);
}

ContinuedFraction positive_rewrite(const ContinuedFraction& cf) {
  ContinuedFraction inv = cf;
  inv.convention = Convention::Inverse;
  const Fraction f = eval_cf(inv);
  const Fraction r = f - Fraction(f.floor());
  if (r.is_zero()) throw InvalidCF("fraction class of the unknot");
  return positive_expansion(r);
}

PlatDiagram plat_for_knot(const TwoBridgeKnot& k) {
  return build_plat(positive_rewrite(k.even_cf()));
}

int all_A_circles(const PlatDiagram& d) { return d.diagram.all_a_circles(); }

int positive_crossings(const PlatDiagram& d) {
  if (d.diagram.component_count() != 1) {
    throw MultiComponent("positive_crossings needs a knot diagram");
  }
  int y = 0;
  for (int s : d.diagram.crossing_signs()) y += s > 0 ? 1 : 0;
  return y;
}

int signature_traczyk(const PlatDiagram& d) {
  return all_A_circles(d) - positive_crossings(d) - 1;
}

}  // namespace tbk
