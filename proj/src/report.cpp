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

#include "tbk/report.hpp"

#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "tbk/errors.hpp"
#include "tbk/jones.hpp"
#include "tbk/seifert.hpp"

namespace tbk {

Json poly_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.pairs()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& pair : j) {
    p += LaurentPoly::monomial(BigInt(pair.at(1).get<std::string>()),
                               pair.at(0).get<long>());
  }
  return p;
}

Json knot_json(const TwoBridgeKnot& k) {
  Json j;
  j["p"] = k.p().get_str();
  j["q"] = k.q().get_str();
  j["even_cf"] = k.even_cf().terms;
  j["chirality"] = k.mirrored() ? "mirror" : "canonical";
  return j;
}

TwoBridgeKnot knot_from_json(const Json& j) {
  try {
    const TwoBridgeKnot k = normalize(BigInt(j.at("p").get<std::string>()),
                                      BigInt(j.at("q").get<std::string>()));
    const std::string c = j.at("chirality").get<std::string>();
    if (c != "canonical" && c != "mirror") {
      throw InvalidInput("unknown chirality " + c);
    }
    return (c == "mirror") != k.mirrored() ? mirror(k) : k;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed knot block: ") + e.what());
  }
}

Json invariants_json(const TwoBridgeKnot& k) {
  const SeifertData sd = seifert_data(k);
  const LaurentPoly conway = conway_poly(sd);
  const LaurentPoly alexander = conway_to_alexander(conway);
  Json j;
  j["alexander"] = poly_json(alexander);
  j["conway"] = poly_json(conway);
  j["jones"] = poly_json(jones_two_bridge(k).V);
  j["signature"] = signature_seifert(sd);
  j["genus"] = genus_alternating(alexander);
  j["determinant"] = determinant(alexander).get_str();
  j["fibered"] = is_fibered_alternating(alexander);
  j["amphichiral"] = is_amphichiral(k);
  return j;
}

Json slope_record_json(const SlopeRecord& r) {
  Json j;
  j["expansion"] = r.expansion.terms;
  j["n_plus"] = r.n_plus;
  j["n_minus"] = r.n_minus;
  j["slope"] = r.slope;
  j["weight"] = r.weight.get_str();
  return j;
}

Json slopes_json(const SlopeSummary& s) {
  Json out = Json::array();
  for (const auto& r : s.records) out.push_back(slope_record_json(r));
  return out;
}

Json casson_json(const SlopeSummary& s, const std::vector<Fraction>& slopes) {
  Json j = Json::object();
  for (const auto& f : slopes) j[f.str()] = casson_difference(s, f).str();
  return j;
}

Json verdict_json(const ObstructionReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  const Stage* d = r.deciding_stage();
  j["stage"] = d ? Json(d->name) : Json(nullptr);
  j["witness"] = d ? d->witness : Json(nullptr);
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json e;
    e["name"] = s.name;
    e["outcome"] = to_string(s.outcome);
    e["witness"] = s.witness;
    stages.push_back(std::move(e));
  }
  j["stages"] = std::move(stages);
  return j;
}

Json build_report(const TwoBridgeKnot& k, const ReportOptions& opt) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["knot"] = knot_json(k);
  if (opt.invariants) j["invariants"] = invariants_json(k);
  std::optional<SlopeSummary> s;
  if (opt.slopes || !opt.casson_slopes.empty()) s = slope_records(k);
  if (opt.slopes) {
    j["slopes"] = slopes_json(*s);
    j["s_plus"] = s->s_plus.get_str();
    j["s_minus"] = s->s_minus.get_str();
  }
  if (!opt.casson_slopes.empty()) {
    j["casson"] = casson_json(*s, opt.casson_slopes);
  }
  if (opt.verdict) j["verdict"] = verdict_json(cosmetic_verdict(k, opt.full));
  return j;
}

namespace {

std::string poly_text(const Json& j, char var) {
  return poly_from_json(j).str(var);
}

std::string cf_text(const Json& j) {
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    s += (i ? "," : "") + std::to_string(j[i].get<long>());
  }
  return s + "]";
}

}  // namespace

std::string report_text(const Json& r) {
  std::ostringstream os;
  const Json& k = r.at("knot");
  os << "knot: b(" << k["p"].get<std::string>() << ","
     << k["q"].get<std::string>() << ")"
     << (k["chirality"] == "mirror" ? "*" : "") << "  even expansion "
     << cf_text(k["even_cf"]) << "\n";
  if (r.contains("invariants")) {
    const Json& i = r["invariants"];
    os << "alexander:   " << poly_text(i["alexander"], 't') << "\n"
       << "conway:      " << poly_text(i["conway"], 'z') << "\n"
       << "jones:       " << poly_text(i["jones"], 't') << "\n"
       << "signature:   " << i["signature"].get<int>() << "\n"
       << "genus:       " << i["genus"].get<int>() << "\n"
       << "determinant: " << i["determinant"].get<std::string>() << "\n"
       << "fibered:     " << (i["fibered"].get<bool>() ? "yes" : "no") << "\n"
       << "amphichiral: " << (i["amphichiral"].get<bool>() ? "yes" : "no")
       << "\n";
  }
  if (r.contains("slopes")) {
    os << "boundary slopes (" << r["slopes"].size() << " expansions):\n";
    for (const auto& s : r["slopes"]) {
      os << "  " << cf_text(s["expansion"]) << "  n+=" << s["n_plus"].get<long>()
         << " n-=" << s["n_minus"].get<long>() << " N=" << s["slope"].get<long>()
         << " W=" << s["weight"].get<std::string>() << "\n";
    }
    os << "S+ = " << r["s_plus"].get<std::string>()
       << ", S- = " << r["s_minus"].get<std::string>() << "\n";
  }
  if (r.contains("casson")) {
    for (const auto& [slope, v] : r["casson"].items()) {
      os << "casson difference at " << slope << ": " << v.get<std::string>()
         << "\n";
    }
  }
  if (r.contains("verdict")) {
    const Json& v = r["verdict"];
    os << "verdict: " << v["verdict"].get<std::string>();
    if (!v["stage"].is_null()) {
      os << " (stage " << v["stage"].get<std::string>() << ", witness "
         << v["witness"].dump() << ")";
    }
    os << "\n";
    for (const auto& s : v["stages"]) {
      os << "  " << s["name"].get<std::string>() << ": "
         << s["outcome"].get<std::string>() << " " << s["witness"].dump()
         << "\n";
    }
  }
  return os.str();
}

ScanResult scan_verdicts(long max_p, unsigned jobs, bool full) {
  if (max_p < 3) throw InvalidInput("--max-p must be at least 3");
  const std::vector<TwoBridgeKnot> knots = canonical_knots(max_p);
  ScanResult out;
  out.reports.resize(knots.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < knots.size(); i = next++) {
      out.reports[i] = cosmetic_verdict(knots[i], full);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : out.reports) {
    if (r.verdict == Verdict::Undetermined) ++out.undetermined;
  }
  return out;
}

Json scan_summary(const ScanResult& s) {
  std::map<std::string, std::size_t> hist;
  for (const auto& r : s.reports) {
    if (const Stage* d = r.deciding_stage()) ++hist[d->name];
  }
  Json h = Json::object();
  for (const char* name : {"hanselman", "boyer_lines", "casson", "ito"}) {
    h[name] = hist[name];
  }
  h["UNDETERMINED"] = s.undetermined;
  Json j;
  j["summary"] = true;
  j["knots"] = s.reports.size();
  j["stages"] = std::move(h);
  return j;
}

}  // namespace tbk
