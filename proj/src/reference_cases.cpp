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

#include "tbk/reference_cases.hpp"

#include <algorithm>

#include "tbk/errors.hpp"
#include "tbk/slopes.hpp"

namespace tbk {

namespace {

using Terms = std::vector<long>;

Terms cat(std::initializer_list<Terms> parts) {
  Terms out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Terms rep(const Terms& unit, long count) {
  if (count < 0) throw OutOfRegion("negative repetition count");
  Terms out;
  for (long i = 0; i < count; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

BigInt b(long v) { return BigInt(v); }

SlopeCase make(std::string id, int region,
               std::function<Terms(long, long)> e,
               std::function<long(long, long)> np,
               std::function<long(long, long)> nm,
               std::function<long(long, long)> n,
               std::function<BigInt(long, long)> w = {}) {
  return SlopeCase{std::move(id), region, std::move(e), std::move(np),
                   std::move(nm), std::move(n), std::move(w)};
}

std::vector<SlopeCase> build_cases() {
  std::vector<SlopeCase> c;
  // Region case 1: y < -1, x + y > 1.
  c.push_back(make(
      "1-1", 1,
      [](long x, long y) {
        return cat({{2 * x - 1, 2}, rep({-2, 2}, -y - 1), {-2 * (x + y), -2},
                    rep({2, -2}, x - 1)});
      },
      [](long x, long) { return 2 * x; }, [](long, long y) { return -2 * y; },
      [](long x, long y) { return 4 * (x + y); },
      [](long x, long y) -> BigInt { return b(2) * (x - 1) * (2 * (x + y) - 1); }));
  c.push_back(make(
      "1-2", 1,
      [](long x, long y) {
        return cat({{2 * x - 1, 2}, rep({-2, 2}, -y - 1),
                    {-2 * (x + y) - 1, 2 * x}});
      },
      [](long, long) { return 1L; }, [](long, long y) { return 1 - 2 * y; },
      [](long, long y) { return 4 * y; },
      [](long x, long y) -> BigInt { return b(4) * (x - 1) * (2 * x - 1) * (x + y); }));
  c.push_back(make(
      "1-3", 1,
      [](long x, long y) {
        return cat({{2 * x, 2 * y, 1 - 2 * (x + y), -2}, rep({2, -2}, x - 1)});
      },
      [](long x, long) { return 2 * x + 1; }, [](long, long) { return 1L; },
      [](long x, long) { return 4 * x; },
      [](long x, long y) -> BigInt {
        return b(-2) * (2 * x - 1) * (2 * y + 1) * (x + y - 1);
      }));
  c.push_back(make(
      "1-4", 1,
      [](long x, long y) { return Terms{2 * x, 2 * y, -2 * (x + y), 2 * x}; },
      [](long, long) { return 2L; }, [](long, long) { return 2L; },
      [](long, long) { return 0L; }));
  c.push_back(make(
      "1-5", 1,
      [](long x, long y) {
        return cat({{2 * x, 2 * y - 1}, rep({2, -2}, x + y - 1),
                    {2, 2 * x - 1}});
      },
      [](long x, long y) { return 2 * (x + y) + 1; },
      [](long, long) { return 1L; },
      [](long x, long y) { return 4 * (x + y); },
      [](long x, long y) -> BigInt { return b(-4) * y * (x - 1) * (2 * x - 1); }));
  c.push_back(make(
      "1-6", 1,
      [](long x, long y) {
        return cat({{2 * x, 2 * y - 1}, rep({2, -2}, x + y - 1), {3},
                    rep({-2, 2}, x - 1)});
      },
      [](long x, long y) { return 4 * x + 2 * y - 1; },
      [](long, long) { return 0L; },
      [](long x, long y) { return 2 * (4 * x + 2 * y - 1); },
      [](long x, long y) -> BigInt { return b(-4) * y * (2 * x - 1); }));
  c.push_back(make(
      "1-7", 1,
      [](long x, long y) {
        return cat({rep({-2, 2}, x - 1), {-2, 2 * y + 1, 1 - 2 * (x + y), -2},
                    rep({2, -2}, x - 1)});
      },
      [](long x, long) { return 2 * x; }, [](long x, long) { return 2 * x; },
      [](long, long) { return 0L; }));
  c.push_back(make(
      "1-8", 1,
      [](long x, long y) {
        return cat({rep({-2, 2}, x - 1), {-2, 2 * y + 1, -2 * (x + y), 2 * x}});
      },
      [](long, long) { return 1L; }, [](long x, long) { return 2 * x + 1; },
      [](long x, long) { return -4 * x; },
      [](long x, long y) -> BigInt {
        return b(-2) * (2 * x - 1) * (y + 1) * (2 * (x + y) - 1);
      }));
  c.push_back(make(
      "1-9", 1,
      [](long x, long y) {
        return cat({rep({-2, 2}, x - 1), {-2, 2 * y}, rep({2, -2}, x + y - 1),
                    {2, 2 * x - 1}});
      },
      [](long x, long y) { return 2 * (x + y); },
      [](long x, long) { return 2 * x; }, [](long, long y) { return 4 * y; },
      [](long x, long y) -> BigInt { return b(-2) * (x - 1) * (2 * y + 1); }));
  c.push_back(make(
      "1-10", 1,
      [](long x, long y) {
        return cat({rep({-2, 2}, x - 1), {-2, 2 * y}, rep({2, -2}, x + y - 1),
                    {3}, rep({-2, 2}, x - 1)});
      },
      [](long x, long y) { return 2 * (2 * x + y - 1); },
      [](long x, long) { return 2 * x - 1; },
      [](long x, long y) { return 2 * (2 * (x + y) - 1); },
      [](long, long y) -> BigInt { return b(-2) * (2 * y + 1); }));
  c.push_back(make(
      "1-11", 1,
      [](long x, long y) {
        return cat({rep({-2, 2}, x - 1), {-3}, rep({2, -2}, -y - 1),
                    {2 * (x + y), 2}, rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 2 * x - 1; },
      [](long x, long y) { return 2 * (x - y - 1); },
      [](long, long y) { return 2 * (2 * y + 1); },
      [](long x, long y) -> BigInt { return b(2) * (2 * (x + y) - 1); }));
  c.push_back(make(
      "1-12", 1,
      [](long x, long y) {
        return cat({rep({-2, 2}, x - 1), {-3}, rep({2, -2}, -y - 1),
                    {2 * (x + y) + 1, -2 * x}});
      },
      [](long, long) { return 0L; },
      [](long x, long y) { return 2 * (x - y) - 1; },
      [](long x, long y) { return -2 * (2 * (x - y) - 1); },
      [](long x, long y) -> BigInt { return b(4) * (x + y) * (2 * x - 1); }));

  // Region case 2: y < -1, x + y = 1.
  c.push_back(make(
      "2-1", 2,
      [](long x, long) {
        return cat({{2 * x - 1, 2}, rep({-2, 2}, x - 2), {-2, -2},
                    rep({2, -2}, x - 1)});
      },
      [](long x, long) { return 2 * x; }, [](long x, long) { return 2 * x - 2; },
      [](long, long) { return 4L; },
      [](long x, long) -> BigInt { return b(2) * (x - 1); }));
  c.push_back(make(
      "2-2", 2,
      [](long x, long) {
        return cat({{2 * x - 1, 2}, rep({-2, 2}, x - 2), {-3, 2 * x}});
      },
      [](long, long) { return 1L; }, [](long x, long) { return 2 * x - 1; },
      [](long x, long) { return -4 * (x - 1); },
      [](long x, long) -> BigInt { return b(4) * (x - 1) * (2 * x - 1); }));
  c.push_back(make(
      "2-3", 2,
      [](long x, long) { return Terms{2 * x, -2 * (x - 1), -2, 2 * x}; },
      [](long, long) { return 2L; }, [](long, long) { return 2L; },
      [](long, long) { return 0L; }));
  c.push_back(make(
      "2-4", 2,
      [](long x, long) { return Terms{2 * x, -2 * x + 1, 2, 2 * x - 1}; },
      [](long, long) { return 3L; }, [](long, long) { return 1L; },
      [](long, long) { return 4L; },
      [](long x, long) -> BigInt { return b(4) * (x - 1) * (x - 1) * (2 * x - 1); }));
  c.push_back(make(
      "2-5", 2,
      [](long x, long) {
        return cat({{2 * x, -2 * x + 1, 3}, rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 2 * x + 1; }, [](long, long) { return 0L; },
      [](long x, long) { return 2 * (2 * x + 1); },
      [](long x, long) -> BigInt { return b(4) * (x - 1) * (2 * x - 1); }));
  c.push_back(make(
      "2-6", 2,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-2, -2 * x + 3, -2, 2 * x}});
      },
      [](long, long) { return 1L; }, [](long x, long) { return 2 * x + 1; },
      [](long x, long) { return -4 * x; },
      [](long x, long) -> BigInt { return b(2) * (x - 2) * (2 * x - 1); }));
  c.push_back(make(
      "2-7", 2,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-2, -2 * (x - 1), 2, 2 * x - 1}});
      },
      [](long, long) { return 2L; }, [](long x, long) { return 2 * x; },
      [](long x, long) { return -4 * (x - 1); },
      [](long x, long) -> BigInt { return b(2) * (x - 1) * (2 * x - 3); }));
  c.push_back(make(
      "2-8", 2,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-2, -2 * (x - 1), 3},
                    rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 2 * x; }, [](long x, long) { return 2 * x - 1; },
      [](long, long) { return 2L; },
      [](long x, long) -> BigInt { return b(2) * (2 * x - 3); }));
  c.push_back(make(
      "2-9", 2,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-3}, rep({2, -2}, x - 2), {2, 2},
                    rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 2 * x - 1; },
      [](long x, long) { return 4 * (x - 1); },
      [](long x, long) { return -2 * (2 * x - 3); },
      [](long, long) -> BigInt { return b(2); }));
  c.push_back(make(
      "2-10", 2,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-3}, rep({2, -2}, x - 2),
                    {3, -2 * x}});
      },
      [](long, long) { return 0L; }, [](long x, long) { return 4 * x - 3; },
      [](long x, long) { return -2 * (4 * x - 3); },
      [](long x, long) -> BigInt { return b(4) * (2 * x - 1); }));

  // Region case 3: y = -1, x + y > 1.
  c.push_back(make(
      "3-1", 3,
      [](long x, long) {
        return cat({{2 * x - 1, 2, -2 * (x - 1), -2}, rep({2, -2}, x - 1)});
      },
      [](long x, long) { return 2 * x; }, [](long, long) { return 2L; },
      [](long x, long) { return 4 * (x - 1); },
      [](long x, long) -> BigInt { return b(2) * (x - 1) * (2 * x + 1); }));
  c.push_back(make(
      "3-2", 3,
      [](long x, long) { return Terms{2 * x - 1, 2, -2 * x + 1, 2 * x}; },
      [](long, long) { return 1L; }, [](long, long) { return 3L; },
      [](long, long) { return -4L; },
      [](long x, long) -> BigInt { return b(4) * (x - 1) * (x - 1) * (2 * x - 1); }));
  c.push_back(make(
      "3-3", 3,
      [](long x, long) {
        return cat({{2 * x, -2, -2 * x + 3, -2}, rep({2, -2}, x - 1)});
      },
      [](long x, long) { return 2 * x + 1; }, [](long, long) { return 1L; },
      [](long x, long) { return 4 * x; },
      [](long x, long) -> BigInt { return b(2) * (2 * x - 1) * (x - 2); }));
  c.push_back(make(
      "3-4", 3,
      [](long x, long) { return Terms{2 * x, -2, -2 * (x - 1), 2 * x}; },
      [](long, long) { return 2L; }, [](long, long) { return 2L; },
      [](long, long) { return 0L; }));
  c.push_back(make(
      "3-5", 3,
      [](long x, long) {
        return cat({{2 * x, -3}, rep({2, -2}, x - 2), {2, 2 * x - 1}});
      },
      [](long x, long) { return 2 * x - 1; }, [](long, long) { return 1L; },
      [](long x, long) { return 4 * (x - 1); },
      [](long x, long) -> BigInt { return b(4) * (x - 1) * (2 * x - 1); }));
  c.push_back(make(
      "3-6", 3,
      [](long x, long) {
        return cat({{2 * x, -3}, rep({2, -2}, x - 2), {3},
                    rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 4 * x - 3; }, [](long, long) { return 0L; },
      [](long x, long) { return 2 * (4 * x - 3); },
      [](long x, long) -> BigInt { return b(4) * (2 * x - 1); }));
  c.push_back(make(
      "3-7", 3,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-2, -2}, rep({2, -2}, x - 2),
                    {2, 2 * x - 1}});
      },
      [](long x, long) { return 2 * (x - 1); },
      [](long x, long) { return 2 * x; }, [](long, long) { return -4L; },
      [](long x, long) -> BigInt { return b(2) * (x - 1); }));
  c.push_back(make(
      "3-8", 3,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-2, -2}, rep({2, -2}, x - 2), {3},
                    rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 4 * (x - 1); },
      [](long x, long) { return 2 * x - 1; },
      [](long x, long) { return 2 * (2 * x - 3); },
      [](long, long) -> BigInt { return b(2); }));
  c.push_back(make(
      "3-9", 3,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-3, 2 * (x - 1), 2},
                    rep({-2, 2}, x - 1)});
      },
      [](long x, long) { return 2 * x - 1; }, [](long x, long) { return 2 * x; },
      [](long, long) { return -2L; },
      [](long x, long) -> BigInt { return b(2) * (2 * x - 3); }));
  c.push_back(make(
      "3-10", 3,
      [](long x, long) {
        return cat({rep({-2, 2}, x - 1), {-3, 2 * x - 1, -2 * x}});
      },
      [](long, long) { return 0L; }, [](long x, long) { return 2 * x + 1; },
      [](long x, long) { return -2 * (2 * x + 1); },
      [](long x, long) -> BigInt { return b(4) * (x - 1) * (2 * x - 1); }));

  // Region case 4: (x, y) = (2, -1).
  auto literal = [&](std::string id, Terms t, long np, long nm, long n,
                     std::optional<long> w) {
    c.push_back(make(
        std::move(id), 4, [t](long, long) { return t; },
        [np](long, long) { return np; }, [nm](long, long) { return nm; },
        [n](long, long) { return n; },
        w ? std::function<BigInt(long, long)>(
                [v = *w](long, long) { return b(v); })
          : std::function<BigInt(long, long)>()));
  };
  literal("4-1", {3, 2, -2, -2, 2, -2}, 4, 2, 4, 2);
  literal("4-2", {3, 2, -3, 4}, 1, 3, -4, 12);
  literal("4-3", {4, -2, -2, 4}, 2, 2, 0, std::nullopt);
  literal("4-4", {4, -3, 2, 3}, 3, 1, 4, 12);
  literal("4-5", {4, -3, 3, -2, 2}, 5, 0, 10, 12);
  literal("4-6", {-2, 2, -2, -2, 2, 3}, 2, 4, -4, 2);
  literal("4-7", {-2, 2, -2, -2, 3, -2, 2}, 4, 3, -2, 2);
  literal("4-8", {-2, 2, -3, 2, 2, -2, 2}, 3, 4, -2, 2);
  literal("4-9", {-2, 2, -3, 3, -4}, 0, 5, -10, 12);
  return c;
}

}  // namespace

const std::vector<SlopeCase>& slope_cases() {
  static const std::vector<SlopeCase> cases = build_cases();
  return cases;
}

int region_case(long x, long y) {
  if (!in_family_region(x, y)) return 0;
  if (y < -1) return x + y > 1 ? 1 : 2;
  return x + y > 1 ? 3 : 4;
}

std::pair<long, long> representative(int rc) {
  switch (rc) {
    case 1: return {4, -2};
    case 2: return {4, -3};
    case 3: return {3, -1};
    case 4: return {2, -1};
    default: throw InvalidInput("region case must be 1..4");
  }
}

const std::vector<Erratum>& known_errata() {
  static const std::vector<Erratum> errata = {{"3-1", "W"}, {"4-7", "N"}};
  return errata;
}

CaseTableCheck check_slope_cases(long x, long y,
                                 std::optional<std::string> only_id) {
  CaseTableCheck out;
  out.x = x;
  out.y = y;
  out.region_case = region_case(x, y);
  if (out.region_case == 0) {
    throw OutOfRegion("(x, y) outside x > 0, y < 0, x + y > 0");
  }
  const ContinuedFraction even({2 * x, 2 * y, -2 * (x + y), 2 * x});
  const SlopeSummary summary = slope_records_from_even_cf(even);
  out.enumerated = summary.records.size();
  const long n0_plus = count_pattern_matches(even);
  const long n0_diff = 2 * n0_plus - static_cast<long>(even.size());

  std::vector<char> used(summary.records.size(), 0);
  std::size_t rows = 0;
  for (const auto& sc : slope_cases()) {
    if (sc.region_case != out.region_case) continue;
    ++rows;
    if (only_id && sc.id != *only_id) continue;
    CaseCheck cc;
    cc.id = sc.id;
    cc.expansion = ContinuedFraction(sc.expansion(x, y), Convention::Direct);
    cc.printed_n_plus = sc.n_plus(x, y);
    cc.printed_n_minus = sc.n_minus(x, y);
    cc.printed_slope = sc.slope(x, y);
    if (sc.weight) cc.printed_weight = sc.weight(x, y);
    for (std::size_t i = 0; i < summary.records.size(); ++i) {
      const auto& rec = summary.records[i];
      if (rec.expansion.terms != cc.expansion.terms) continue;
      cc.found = true;
      used[i] = 1;
      cc.n_plus = rec.n_plus;
      cc.n_minus = rec.n_minus;
      cc.slope = rec.slope;
      cc.weight = rec.weight;
    }
    if (!cc.found) {
      out.failures.push_back(sc.id + ": printed expansion " +
                             cc.expansion.str() + " is not enumerated");
      out.cases.push_back(std::move(cc));
      continue;
    }
    // Values implied by the printed row itself.
    BigInt own_weight = 1;
    for (long a : cc.expansion.terms) own_weight *= std::labs(a) - 1;
    const long own_n_plus = count_pattern_matches(cc.expansion);
    const long own_slope =
        2 * ((cc.printed_n_plus - cc.printed_n_minus) - n0_diff);
    auto field = [&](const std::string& name, bool differs, bool self_bad) {
      if (!differs) return;
      cc.mismatches.push_back(name);
      if (self_bad) cc.self_contradictions.push_back(name);
    };
    field("n+", cc.printed_n_plus != cc.n_plus,
          cc.printed_n_plus != own_n_plus);
    field("n-", cc.printed_n_minus != cc.n_minus,
          cc.printed_n_minus !=
              static_cast<long>(cc.expansion.size()) - own_n_plus);
    field("N", cc.printed_slope != cc.slope, cc.printed_slope != own_slope);
    if (cc.printed_weight) {
      field("W", *cc.printed_weight != cc.weight,
            *cc.printed_weight != own_weight);
    }
    for (const auto& m : cc.mismatches) {
      const bool listed = std::any_of(
          known_errata().begin(), known_errata().end(),
          [&](const Erratum& e) { return e.id == cc.id && e.field == m; });
      const bool confirmed =
          std::find(cc.self_contradictions.begin(),
                    cc.self_contradictions.end(),
                    m) != cc.self_contradictions.end();
      if (listed && confirmed) {
        out.errata_applied.push_back(cc.id + " " + m);
      } else {
        out.failures.push_back(cc.id + ": field " + m + " differs" +
                               (listed ? " (listed erratum not confirmed)"
                                       : ""));
      }
    }
    out.cases.push_back(std::move(cc));
  }
  if (!only_id) {
    for (std::size_t i = 0; i < summary.records.size(); ++i) {
      if (!used[i]) out.unmatched.push_back(summary.records[i].expansion);
    }
    for (const auto& u : out.unmatched) {
      out.failures.push_back("enumerated expansion " + u.str() +
                             " has no table row");
    }
    if (rows != summary.records.size()) {
      out.failures.push_back("table has " + std::to_string(rows) +
                             " rows, enumeration has " +
                             std::to_string(summary.records.size()));
    }
  } else if (out.cases.empty()) {
    throw InvalidInput("no case " + *only_id + " in region case " +
                       std::to_string(out.region_case));
  }
  out.pass = out.failures.empty();
  return out;
}

}  // namespace tbk
