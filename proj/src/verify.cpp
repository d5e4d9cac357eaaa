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

#include "tbk/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tbk/errors.hpp"
#include "tbk/jones.hpp"
#include "tbk/plat_diagram.hpp"
#include "tbk/reference_cases.hpp"
#include "tbk/seifert.hpp"
#include "tbk/slopes.hpp"

namespace tbk {

void SuiteResult::check(bool ok, const std::string& what) {
  details.push_back((ok ? "ok   " : "FAIL ") + what);
  if (!ok) {
    pass = false;
    failures.push_back(what);
  }
}

namespace {

std::string xy_str(long x, long y) {
  return "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

BigInt pow4(long n) {
  const BigInt b = n;
  return b * b * b * b;
}

}  // namespace

SuiteResult verify_slope_cases(std::optional<std::string> case_id,
                               std::optional<std::pair<long, long>> xy) {
  SuiteResult r;
  r.name = "slope case tables";
  std::vector<std::pair<long, long>> params;
  if (xy) {
    params.push_back(*xy);
  } else if (case_id) {
    const std::string& id = *case_id;
    const auto dash = id.find('-');
    if (id.size() < 3 || dash != 1 || id[0] < '1' || id[0] > '4') {
      throw InvalidInput("case id must look like 1-5");
    }
    params.push_back(representative(id[0] - '0'));
  } else {
    for (int rc = 1; rc <= 4; ++rc) params.push_back(representative(rc));
  }
  for (const auto& [x, y] : params) {
    const CaseTableCheck c = check_slope_cases(x, y, case_id);
    for (const auto& cc : c.cases) {
      std::ostringstream line;
      line << "case " << cc.id << " " << xy_str(x, y) << ": "
           << cc.expansion.str() << " n+=" << cc.printed_n_plus
           << " n-=" << cc.printed_n_minus << " N=" << cc.printed_slope
           << " W=" << (cc.printed_weight ? cc.printed_weight->get_str() : "-");
      if (!cc.found) {
        r.check(false, line.str() + " | expansion not enumerated");
        continue;
      }
      std::vector<std::string> unexplained;
      std::vector<std::string> errata;
      for (const auto& m : cc.mismatches) {
        const std::string tag = cc.id + " " + m;
        if (std::find(c.errata_applied.begin(), c.errata_applied.end(), tag) !=
            c.errata_applied.end()) {
          errata.push_back(m);
        } else {
          unexplained.push_back(m);
        }
      }
      if (!cc.mismatches.empty()) {
        line << " | enumerated n+=" << cc.n_plus << " n-=" << cc.n_minus
             << " N=" << cc.slope << " W=" << cc.weight;
      }
      for (const auto& e : errata) {
        line << " | printed " << e
             << " contradicts its own row (known erratum)";
      }
      for (const auto& u : unexplained) line << " | " << u << " differs";
      r.check(unexplained.empty(), line.str());
    }
    if (!case_id) {
      r.check(c.unmatched.empty() && c.cases.size() == c.enumerated,
              "region case " + std::to_string(c.region_case) + " " +
                  xy_str(x, y) + ": " + std::to_string(c.cases.size()) +
                  " table rows, " + std::to_string(c.enumerated) +
                  " enumerated expansions");
    }
  }
  return r;
}

SuiteResult verify_closed_form_grid(long x_max, long y_max) {
  SuiteResult r;
  r.name = "S- - S+ closed form";
  long points = 0;
  for (long x = 1; x <= x_max; ++x) {
    for (long y = -y_max; y < 0; ++y) {
      if (x + y <= 0) continue;
      ++points;
      const BigInt e = s_difference_family(x, y);
      const BigInt f = s_difference_closed(x, y);
      if (e != f) {
        r.check(false, xy_str(x, y) + ": enumerated " + e.get_str() +
                           ", closed form " + f.get_str());
      }
    }
  }
  r.check(r.failures.empty(), std::to_string(points) + " grid points agree");
  return r;
}

SuiteResult verify_conway_family(long n_min, long n_max) {
  SuiteResult r;
  r.name = "Conway polynomial of C[4n,-2n,-2n,4n]";
  for (long n = n_min; n <= n_max; ++n) {
    const LaurentPoly c = conway_poly(seifert_data(family_knot_n(n)));
    const LaurentPoly expected = LaurentPoly(1) + LaurentPoly::term(4 * pow4(n), 4);
    r.check(c == expected, "n=" + std::to_string(n) + ": " + c.str('z') +
                               " (expected " + expected.str('z') + ")");
  }
  return r;
}

SuiteResult verify_jones_family(long n_min, long n_max) {
  SuiteResult r;
  r.name = "Jones polynomial of C[4n,-2n,-2n,4n]";
  for (long n = n_min; n <= n_max; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const LaurentPoly v = jones_two_bridge(family_knot_n(n)).V;
    const LaurentPoly one_t = t_pow(1) + 1;
    const LaurentPoly one_ti = t_pow(-1) + 1;
    const LaurentPoly lhs = one_t * one_t * one_ti * one_ti * (v - 1);
    const LaurentPoly c = t_pow(2 * n) - t_pow(-2 * n);
    const LaurentPoly rhs = (LaurentPoly(1) - t_pow(2 * n)) *
                            (LaurentPoly(1) - t_pow(-2 * n)) * c * c *
                            (t_pow(1) + 1 + t_pow(-1));
    r.check(lhs == rhs, tag + ": (1+t)^2(1+t^-1)^2(V-1) identity");
    r.check(v == jones_family_skein(n),
            tag + ": diagram engine equals the skein assembly");
    r.check(v == jones_family_closed(n),
            tag + ": diagram engine equals the closed form");
    const Fraction j = j4(v);
    const Fraction expected(-12 * pow4(n));
    r.check(j == expected,
            tag + ": j4 = " + j.str() + " (expected " + expected.str() + ")");
  }
  return r;
}

SuiteResult verify_signature_grid(long x_max, long y_max) {
  SuiteResult r;
  r.name = "signature trichotomy";
  long counts[3] = {0, 0, 0};
  for (long x = 1; x <= x_max; ++x) {
    for (long y = -y_max; y <= y_max; ++y) {
      if (y == 0 || x + y == 0) continue;
      int region;
      long o_expected, y_expected;
      int sigma_expected;
      if (y > 0) {
        region = 0;
        sigma_expected = -2;
        o_expected = 4 * x + 4 * y - 3;
        y_expected = 4 * x + 4 * y - 2;
      } else if (x + y > 0) {
        region = 1;
        sigma_expected = 0;
        o_expected = 4 * x + 2 * y;
        y_expected = 4 * x + 2 * y - 1;
      } else {
        region = 2;
        sigma_expected = 2;
        o_expected = 2 * x + 3;
        y_expected = 2 * x;
      }
      ++counts[region];
      const TwoBridgeKnot k = family_knot(x, y);
      const int s_seifert = signature_seifert(seifert_data(k));
      const PlatDiagram d = plat_for_knot(k);
      const int o = all_A_circles(d);
      const int yy = positive_crossings(d);
      const int s_diagram = o - yy - 1;
      const bool ok = s_seifert == sigma_expected &&
                      s_diagram == sigma_expected && o == o_expected &&
                      yy == y_expected && d.diagram.is_alternating();
      if (!ok) {
        r.check(false, xy_str(x, y) + ": sigma " + std::to_string(s_seifert) +
                           " / " + std::to_string(s_diagram) + ", o(D)=" +
                           std::to_string(o) + " (expected " +
                           std::to_string(o_expected) + "), y(D)=" +
                           std::to_string(yy) + " (expected " +
                           std::to_string(y_expected) + ")");
      }
    }
  }
  const char* names[3] = {"case (i) y > 0: sigma -2",
                          "case (ii) y < 0, x+y > 0: sigma 0",
                          "case (iii) x+y < 0: sigma +2"};
  for (int i = 0; i < 3; ++i) {
    r.details.push_back(std::string(names[i]) + ", " +
                        std::to_string(counts[i]) + " knots");
  }
  r.check(r.failures.empty(),
          "both routes and the o(D), y(D) counts agree on the grid");
  return r;
}

SuiteResult verify_ito_arithmetic(long n_min, long n_max) {
  SuiteResult r;
  r.name = "finite-type arithmetic";
  for (long n = n_min; n <= n_max; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    const BigInt n4 = pow4(n);
    const Fraction j(-12 * n4);
    const ItoCheck c = ito_check(j, n);
    r.check(c.at_slope_one == Fraction(-74 * n4),
            tag + ": (p^2,q^2)=(1,1) gives " + c.at_slope_one.str());
    r.check(c.at_slope_two == Fraction(-26 * n4),
            tag + ": (p^2,q^2)=(4,1) gives " + c.at_slope_two.str());
    r.check(c.outcome == Outcome::Excludes, tag + ": j4 = -12n^4 excludes");
    r.check(ito_reduced(Fraction(284 * n4), n, 1, 1).is_zero(),
            tag + ": j4 = 284n^4 makes the (1,1) expression vanish");
    r.check(ito_reduced(Fraction(14 * n4), n, 4, 1).is_zero(),
            tag + ": j4 = 14n^4 makes the (4,1) expression vanish");
    r.check(ito_check(Fraction(284 * n4), n).outcome == Outcome::Passes,
            tag + ": j4 = 284n^4 does not exclude");
  }
  return r;
}

SuiteResult verify_family_pipeline(long n_min, long n_max) {
  SuiteResult r;
  r.name = "obstruction pipeline on C[4n,-2n,-2n,4n]";
  for (long n = n_min; n <= n_max; ++n) {
    const std::string tag = "n=" + std::to_string(n);
    std::vector<TwoBridgeKnot> knots = {family_knot_n(n)};
    if (!is_amphichiral(knots[0])) knots.push_back(mirror(knots[0]));
    for (const TwoBridgeKnot& k : knots) {
      const ObstructionReport rep = cosmetic_verdict(k, true);
      std::string seq;
      for (const auto& s : rep.stages) {
        seq += (seq.empty() ? "" : ", ") + s.name + " " + to_string(s.outcome);
      }
      const bool shape =
          rep.stages.size() == 4 && rep.stages[0].outcome == Outcome::Passes &&
          rep.stages[1].outcome == Outcome::Passes &&
          rep.stages[2].outcome == Outcome::Passes &&
          rep.stages[3].outcome == Outcome::Excludes;
      const auto& h = rep.stages[0].witness;
      const bool coefficient = h.contains("n_coefficient") &&
                               h["n_coefficient"] == BigInt(4 * pow4(n)).get_str();
      r.check(shape && coefficient &&
                  rep.verdict == Verdict::NoCosmeticSurgeries,
              tag + " " + k.name() + ": " + seq);
    }
  }
  return r;
}

SuiteResult verify_section3(const std::vector<CatalogEntry>& catalog) {
  SuiteResult r;
  r.name = "fibered generators";
  const std::set<std::string> expected = {"6_3", "7_7", "8_12", "3_1#3_1*",
                                          "4_1#4_1"};
  std::set<std::string> fibered;
  for (const auto& e : fibered_generators(catalog)) fibered.insert(e.name);
  std::string listed;
  for (const auto& n : fibered) listed += (listed.empty() ? "" : ", ") + n;
  r.check(catalog.size() == 8,
          std::to_string(catalog.size()) + " generators in the catalog");
  r.check(fibered == expected, "fibered: " + listed);
  for (const auto& [name, h] : section3_verdict(catalog)) {
    r.check(!h.matches_family && h.outcome == Outcome::Excludes,
            name + ": Hanselman form " +
                (h.matches_family ? "matches" : "fails") + ", " +
                to_string(h.outcome));
  }
  return r;
}

}  // namespace tbk
