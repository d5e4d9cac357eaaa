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

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tbk/catalog.hpp"
#include "tbk/errors.hpp"
#include "tbk/rational.hpp"
#include "tbk/report.hpp"
#include "tbk/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitUndetermined = 3;

struct KnotArgs {
  std::string fraction;
  std::string cf;
  std::string format = "json";
};

void add_knot_options(CLI::App* cmd, KnotArgs& a) {
  auto* f = cmd->add_option("--fraction", a.fraction,
                            "two-bridge knot b(p, q) given as p/q");
  auto* c = cmd->add_option("--cf", a.cf,
                            "continued fraction a1,a2,... of q/p "
                            "(1/(a1 + 1/(a2 + ...)))");
  f->excludes(c);
  cmd->add_option("--format", a.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

tbk::BigInt parse_bigint(const std::string& s) {
  try {
    return tbk::BigInt(s);
  } catch (const std::invalid_argument&) {
    throw tbk::InvalidInput("malformed integer '" + s + "'");
  }
}

tbk::TwoBridgeKnot knot_from_args(const KnotArgs& a) {
  if (!a.fraction.empty()) {
    const auto slash = a.fraction.find('/');
    if (slash == std::string::npos) {
      throw tbk::InvalidInput("--fraction needs the form p/q");
    }
    return tbk::normalize(parse_bigint(a.fraction.substr(0, slash)),
                          parse_bigint(a.fraction.substr(slash + 1)));
  }
  if (!a.cf.empty()) {
    std::vector<long> terms;
    std::stringstream in(a.cf);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        std::size_t used = 0;
        terms.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw tbk::InvalidInput("malformed continued fraction term '" + tok +
                                "'");
      }
    }
    if (terms.empty()) throw tbk::InvalidInput("empty continued fraction");
    for (long t : terms) {
      if (t == 0) throw tbk::InvalidCF("continued fraction with a zero term");
    }
    return tbk::knot_from_cf(tbk::ContinuedFraction(terms));
  }
  throw tbk::InvalidInput("give the knot with --fraction p/q or --cf a1,a2,...");
}

void emit(const tbk::Json& report, const std::string& format) {
  if (format == "text") {
    std::cout << tbk::report_text(report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

int verdict_exit(const tbk::Json& report) {
  if (report.contains("verdict") &&
      report["verdict"]["verdict"] == "UNDETERMINED") {
    std::cerr << "verdict UNDETERMINED\n";
    return kExitUndetermined;
  }
  return kExitOk;
}

std::optional<std::pair<long, long>> parse_family_arg(const std::string& s) {
  std::string v = s;
  if (v.rfind("n=", 0) == 0) v = v.substr(2);
  try {
    std::size_t used = 0;
    const long n = std::stol(v, &used);
    if (used != v.size() || n < 1) throw std::invalid_argument(v);
    return std::make_pair(n, n);
  } catch (const std::logic_error&) {
    throw tbk::InvalidInput("--family needs n=<positive integer>");
  }
}

std::vector<tbk::CatalogEntry> catalog() {
  try {
    return tbk::load_catalog();
  } catch (const tbk::ValidationError& e) {
    throw tbk::InvalidInput(std::string("invalid catalog: ") + e.what());
  }
}

tbk::Json suite_json(const tbk::SuiteResult& r) {
  tbk::Json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["details"] = r.details;
  j["failures"] = r.failures;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and cosmetic-surgery obstructions of two-bridge knots"};
  app.require_subcommand(1);

  KnotArgs inv_args, slope_args, casson_args, cosmetic_args;
  auto* inv = app.add_subcommand("invariants",
                                 "Alexander, Conway, Jones, signature, genus");
  add_knot_options(inv, inv_args);

  auto* slopes = app.add_subcommand("slopes", "boundary slope table and S+-");
  add_knot_options(slopes, slope_args);

  std::string casson_slope;
  auto* casson = app.add_subcommand("casson", "SL(2,C) Casson surgery difference");
  add_knot_options(casson, casson_args);
  casson->add_option("--slope", casson_slope, "surgery slope p/q")->required();

  bool cosmetic_full = false;
  auto* cosmetic = app.add_subcommand("cosmetic", "obstruction pipeline verdict");
  add_knot_options(cosmetic, cosmetic_args);
  cosmetic->add_flag("--full", cosmetic_full, "run every stage");

  long max_p = 0;
  unsigned jobs = 1;
  bool scan_full = false;
  std::string scan_format = "json";
  auto* scan = app.add_subcommand("scan", "verdicts for all knots with p <= N");
  scan->add_option("--max-p", max_p, "largest determinant")->required();
  scan->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_flag("--full", scan_full, "run every stage");
  scan->add_option("--format", scan_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  bool v_all = false, v_sig = false, v_sec3 = false;
  std::string v_case, v_family, v_format = "text";
  std::optional<long> v_x, v_y;
  auto* verify = app.add_subcommand("verify-paper", "reproduction suites");
  verify->add_flag("--all", v_all, "every suite (default)");
  verify->add_option("--case", v_case, "one slope case, e.g. 1-5");
  verify->add_option("--x", v_x, "family parameter x for --case");
  verify->add_option("--y", v_y, "family parameter y for --case");
  verify->add_option("--family", v_family, "n=<n>: Conway, Jones, j4 and the pipeline");
  verify->add_flag("--sig-grid", v_sig, "signature trichotomy grid");
  verify->add_flag("--section3", v_sec3, "fibered generator catalog");
  verify->add_option("--format", v_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*inv) {
      tbk::ReportOptions o;
      o.slopes = false;
      o.casson_slopes.clear();
      o.verdict = false;
      const auto r = tbk::build_report(knot_from_args(inv_args), o);
      emit(r, inv_args.format);
      return kExitOk;
    }
    if (*slopes) {
      tbk::ReportOptions o;
      o.invariants = false;
      o.casson_slopes.clear();
      o.verdict = false;
      emit(tbk::build_report(knot_from_args(slope_args), o), slope_args.format);
      return kExitOk;
    }
    if (*casson) {
      tbk::ReportOptions o;
      o.invariants = false;
      o.slopes = false;
      o.verdict = false;
      const tbk::Fraction s = tbk::Fraction::parse(casson_slope);
      if (s.is_zero()) throw tbk::InvalidSlope("slope must be nonzero");
      o.casson_slopes = {s};
      emit(tbk::build_report(knot_from_args(casson_args), o),
           casson_args.format);
      return kExitOk;
    }
    if (*cosmetic) {
      tbk::ReportOptions o;
      o.invariants = false;
      o.slopes = false;
      o.casson_slopes.clear();
      o.full = cosmetic_full;
      const auto r = tbk::build_report(knot_from_args(cosmetic_args), o);
      emit(r, cosmetic_args.format);
      return verdict_exit(r);
    }
    if (*scan) {
      const tbk::ScanResult res = tbk::scan_verdicts(max_p, jobs, scan_full);
      for (const auto& rep : res.reports) {
        if (scan_format == "text") {
          const tbk::Stage* d = rep.deciding_stage();
          std::cout << rep.knot.name() << " " << tbk::to_string(rep.verdict)
                    << " " << (d ? d->name : "-") << "\n";
        } else {
          tbk::Json line;
          line["knot"] = tbk::knot_json(rep.knot);
          line["verdict"] = tbk::verdict_json(rep);
          std::cout << line.dump() << "\n";
        }
      }
      std::cout << tbk::scan_summary(res).dump() << "\n";
      return res.undetermined ? kExitUndetermined : kExitOk;
    }
    if (*verify) {
      if ((v_x.has_value() || v_y.has_value()) &&
          (v_case.empty() || !v_x || !v_y)) {
        throw tbk::InvalidInput("--x and --y go together with --case");
      }
      std::vector<tbk::SuiteResult> suites;
      const bool any = !v_case.empty() || !v_family.empty() || v_sig || v_sec3;
      if (!v_case.empty()) {
        std::optional<std::pair<long, long>> xy;
        if (v_x) xy = std::make_pair(*v_x, *v_y);
        suites.push_back(tbk::verify_slope_cases(v_case, xy));
      }
      if (!v_family.empty()) {
        const auto [lo, hi] = *parse_family_arg(v_family);
        suites.push_back(tbk::verify_conway_family(lo, hi));
        suites.push_back(tbk::verify_jones_family(lo, hi));
        suites.push_back(tbk::verify_ito_arithmetic(lo, hi));
        suites.push_back(tbk::verify_family_pipeline(lo, hi));
      }
      if (v_sig) suites.push_back(tbk::verify_signature_grid());
      if (v_sec3) suites.push_back(tbk::verify_section3(catalog()));
      if (v_all || !any) {
        suites.push_back(tbk::verify_slope_cases());
        suites.push_back(tbk::verify_closed_form_grid());
        suites.push_back(tbk::verify_conway_family());
        suites.push_back(tbk::verify_jones_family());
        suites.push_back(tbk::verify_signature_grid());
        suites.push_back(tbk::verify_ito_arithmetic());
        suites.push_back(tbk::verify_family_pipeline());
        suites.push_back(tbk::verify_section3(catalog()));
      }
      bool pass = true;
      for (const auto& s : suites) pass = pass && s.pass;
      if (v_format == "json") {
        tbk::Json out;
        out["pass"] = pass;
        out["suites"] = tbk::Json::array();
        for (const auto& s : suites) out["suites"].push_back(suite_json(s));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& s : suites) {
          std::cout << (s.pass ? "PASS " : "FAIL ") << s.name << "\n";
          for (const auto& d : s.details) std::cout << "  " << d << "\n";
        }
      }
      return pass ? kExitOk : kExitMismatch;
    }
  } catch (const tbk::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}
