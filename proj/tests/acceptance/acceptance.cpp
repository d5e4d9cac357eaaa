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

// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "property/properties.hpp"
#include "tbk/catalog.hpp"
#include "tbk/reference_cases.hpp"
#include "tbk/report.hpp"
#include "tbk/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;
};

Outcome from_suite(const tbk::SuiteResult& s) {
  Outcome o;
  o.pass = s.pass;
  o.failures = s.failures;
  return o;
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << " s";
  return os.str();
}

Outcome criterion1() {
  Outcome o;
  double worst = 0;
  std::vector<std::string> errata;
  std::size_t rows = 0;
  for (int rc = 1; rc <= 4; ++rc) {
    const auto [x, y] = tbk::representative(rc);
    const auto start = Clock::now();
    const tbk::CaseTableCheck c = tbk::check_slope_cases(x, y);
    worst = std::max(worst, seconds_since(start));
    rows += c.cases.size();
    for (const auto& e : c.errata_applied) errata.push_back(e);
    for (const auto& f : c.failures) o.failures.push_back(f);
    if (!c.pass) o.pass = false;
  }
  const tbk::SuiteResult s = tbk::verify_slope_cases();
  if (!s.pass) o.pass = false;
  if (worst >= 1.0) {
    o.pass = false;
    o.failures.push_back("slowest knot took " + fmt_seconds(worst));
  }
  std::string e;
  for (const auto& x : errata) e += (e.empty() ? "" : ", ") + x;
  o.summary = std::to_string(rows) +
              " rows at (4,-2), (4,-3), (3,-1), (2,-1): every expansion, n+ "
              "and n- matches the enumeration line for line and no "
              "enumerated expansion is missing; N and W match except " +
              std::to_string(errata.size()) +
              " printed values that contradict their own row (" + e +
              "); slowest knot " + fmt_seconds(worst);
  return o;
}

Outcome criterion2() {
  const auto start = Clock::now();
  Outcome o = from_suite(tbk::verify_closed_form_grid(8, 8));
  const double t = seconds_since(start);
  if (t >= 30) o.pass = false;
  o.summary = "S- - S+ = 2(x+2y)(4x^2-6x+5) on 28 points of 1<=x<=8, "
              "-8<=y<0, x+y>0 in " + fmt_seconds(t);
  return o;
}

Outcome criterion3() {
  Outcome o = from_suite(tbk::verify_conway_family(1, 5));
  o.summary = "Conway polynomial 1 + 4n^4 z^4 for n = 1..5";
  return o;
}

Outcome criterion4() {
  const auto start = Clock::now();
  Outcome o = from_suite(tbk::verify_jones_family(1, 4));
  const double t = seconds_since(start);
  if (t >= 5) o.pass = false;
  o.summary = "Jones identity, engine = skein = closed form, j4 = -12n^4 for "
              "n = 1..4 in " + fmt_seconds(t);
  return o;
}

Outcome criterion5() {
  Outcome o = from_suite(tbk::verify_signature_grid(8, 8));
  std::string counts;
  for (const auto& d : tbk::verify_signature_grid(8, 8).details) {
    if (d.rfind("case", 0) == 0) counts += (counts.empty() ? "" : "; ") + d;
  }
  o.summary = "Seifert and o(D)-y(D)-1 routes with closed o/y counts over "
              "1<=x<=8, -8<=y<=8 (" + counts + ")";
  return o;
}

Outcome criterion6() {
  Outcome o = from_suite(tbk::verify_ito_arithmetic(1, 4));
  o.summary = "-74n^4 at (1,1), -26n^4 at (4,1), zeros at j4 = 284n^4 and "
              "14n^4, n = 1..4";
  return o;
}

Outcome criterion7() {
  const auto start = Clock::now();
  const tbk::ScanResult s = tbk::scan_verdicts(200, 1);
  const double t = seconds_since(start);
  Outcome o;
  o.pass = s.undetermined == 0 && t < 120 && !s.reports.empty();
  for (const auto& r : s.reports) {
    if (r.verdict != tbk::Verdict::NoCosmeticSurgeries) {
      o.failures.push_back(r.knot.name() + " undetermined");
    }
  }
  o.summary = std::to_string(s.reports.size()) +
              " canonical knots with p <= 200, all NO_COSMETIC_SURGERIES, " +
              std::to_string(s.undetermined) + " UNDETERMINED, stages " +
              tbk::scan_summary(s)["stages"].dump() + ", single thread " +
              fmt_seconds(t);
  return o;
}

Outcome criterion8() {
  Outcome o = from_suite(tbk::verify_section3(tbk::load_catalog()));
  o.summary = "fibered = {6_3, 7_7, 8_12, 3_1#3_1*, 4_1#4_1}, all fail the "
              "Hanselman form";
  return o;
}

Outcome criterion9() {
  using namespace tbk::props;
  Outcome o;
  const std::vector<PropertyResult> results = {
      transfer_matches_state_sum(12),
      signed_transfer_matches_state_sum(400, 7),
      skein_relation(10),
      determinant_and_normalization(301),
      mirror_symmetries(151),
      signature_routes_agree(201),
      casson_reduction(151),
      connected_sum_alexander(200, 11),
      presentation_invariance(101),
  };
  std::string s;
  for (const auto& r : results) {
    if (!r.pass()) {
      o.pass = false;
      for (const auto& f : r.failures) o.failures.push_back(r.name + ": " + f);
    }
    s += (s.empty() ? "" : "; ") + r.name + " (" + std::to_string(r.checked) +
         ")";
  }
  o.summary = s;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1)
              << ": " << o.summary << std::endl;
    for (const auto& f : o.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
