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

#include "tbk/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "tbk/errors.hpp"
#include "tbk/seifert.hpp"

namespace tbk {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  throw ParseError("catalog line " + std::to_string(line) + ": " + msg);
}

long parse_long(const std::string& s, std::size_t line,
                const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    parse_fail(line, "bad " + what + " '" + s + "'");
  }
}

struct Resolved {
  LaurentPoly alexander;
  int genus = 0;
  std::optional<int> signature;
};

Resolved resolve_factor(const std::string& raw,
                        const std::map<std::string, Resolved>& known,
                        std::size_t line) {
  std::string name = raw;
  bool mirror_factor = false;
  if (!name.empty() && name.back() == '*') {
    mirror_factor = true;
    name.pop_back();
  }
  Resolved r;
  if (auto it = known.find(name); it != known.end()) {
    r = it->second;
  } else if (auto k = builtin_knot(name)) {
    const SeifertData sd = seifert_data(*k);
    r.alexander = alexander_poly(sd);
    r.genus = genus_alternating(r.alexander);
    r.signature = signature_seifert(sd);
  } else {
    parse_fail(line, "unknown factor '" + raw + "'");
  }
  if (mirror_factor && r.signature) r.signature = -*r.signature;
  return r;
}

}  // namespace

LaurentPoly alexander_from_coeffs(const std::vector<long>& coeffs) {
  if (coeffs.empty() || coeffs.size() % 2 == 0) {
    throw InvalidInput("Alexander coefficient list needs odd length");
  }
  const long lowest = -static_cast<long>(coeffs.size() / 2);
  return LaurentPoly::from_coeffs(lowest, coeffs);
}

std::optional<TwoBridgeKnot> builtin_knot(const std::string& name) {
  static const std::map<std::string, std::pair<long, long>> table = {
      {"3_1", {3, 1}},  {"4_1", {5, 2}},  {"5_1", {5, 1}}, {"5_2", {7, 2}},
      {"6_1", {9, 2}},  {"6_2", {11, 3}}, {"6_3", {13, 5}}};
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return normalize(it->second.first, it->second.second);
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("TBK_CATALOG"); env && *env) return env;
  return std::string(TBK_DATA_DIR) + "/generators.csv";
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::map<std::string, Resolved> known;
  std::istringstream in(text);
  std::string row;
  std::size_t line = 0;
  bool header_seen = false;
  while (std::getline(in, row)) {
    ++line;
    if (trim(row).empty()) continue;
    std::vector<std::string> f = split(row, ',');
    for (auto& s : f) s = trim(s);
    if (!header_seen) {
      const std::vector<std::string> header = {
          "name", "kind", "descriptor", "alexander", "genus", "signature",
          "source"};
      if (f != header) parse_fail(line, "unexpected header");
      header_seen = true;
      continue;
    }
    if (f.size() != 7) {
      parse_fail(line, "expected 7 fields, found " + std::to_string(f.size()));
    }
    CatalogEntry e;
    e.name = f[0];
    if (e.name.empty()) parse_fail(line, "empty name");
    if (known.count(e.name)) parse_fail(line, "duplicate name " + e.name);
    e.descriptor = f[2];
    e.source = f[6];
    e.genus = static_cast<int>(parse_long(f[4], line, "genus"));
    if (!f[5].empty()) {
      e.signature = static_cast<int>(parse_long(f[5], line, "signature"));
    }
    std::optional<LaurentPoly> stored;
    if (!f[3].empty()) {
      std::vector<long> coeffs;
      for (const auto& c : split(f[3], ';')) {
        coeffs.push_back(parse_long(trim(c), line, "coefficient"));
      }
      try {
        stored = alexander_from_coeffs(coeffs);
      } catch (const InvalidInput& err) {
        parse_fail(line, err.what());
      }
    }
    auto invalid = [&](const std::string& what) {
      throw ValidationError("catalog entry " + e.name + " (line " +
                            std::to_string(line) + "): " + what);
    };

    std::optional<LaurentPoly> computed;
    std::optional<int> computed_genus;
    std::optional<int> computed_sig;
    if (f[1] == "twobridge") {
      e.kind = EntryKind::TwoBridge;
      try {
        const Fraction fr = Fraction::parse(e.descriptor);
        e.knot = normalize(fr.num(), fr.den());
      } catch (const InputError& err) {
        parse_fail(line, std::string("bad two-bridge descriptor: ") +
                             err.what());
      }
      const SeifertData sd = seifert_data(*e.knot);
      computed = alexander_poly(sd);
      computed_genus = genus_alternating(*computed);
      computed_sig = signature_seifert(sd);
    } else if (f[1] == "sum") {
      e.kind = EntryKind::Sum;
      e.factors = split(e.descriptor, ':');
      if (e.factors.size() < 2) parse_fail(line, "sum needs two factors");
      LaurentPoly prod(1);
      int g = 0;
      std::optional<int> sig = 0;
      for (auto& fac : e.factors) {
        fac = trim(fac);
        const Resolved r = resolve_factor(fac, known, line);
        prod *= r.alexander;
        g += r.genus;
        if (sig && r.signature) {
          *sig += *r.signature;
        } else {
          sig.reset();
        }
      }
      computed = prod;
      computed_genus = g;
      computed_sig = sig;
    } else if (f[1] == "table") {
      e.kind = EntryKind::Table;
      if (!stored) parse_fail(line, "table rows need Alexander coefficients");
    } else {
      parse_fail(line, "unknown kind '" + f[1] + "'");
    }

    if (computed && stored && *computed != *stored) {
      invalid("stored Alexander polynomial " + stored->str() +
              " differs from computed " + computed->str());
    }
    e.alexander = computed ? *computed : *stored;
    const BigInt at_one = e.alexander.value_at_one();
    if (at_one != 1 && at_one != -1) {
      invalid("Alexander polynomial has Delta(1) = " + at_one.get_str());
    }
    if (!e.alexander.is_palindromic()) {
      invalid("Alexander polynomial is not symmetric");
    }
    if (computed_genus && *computed_genus != e.genus) {
      invalid("stored genus " + std::to_string(e.genus) +
              " differs from computed " + std::to_string(*computed_genus));
    }
    if (computed_sig) {
      if (e.signature && *e.signature != *computed_sig) {
        invalid("stored signature " + std::to_string(*e.signature) +
                " differs from computed " + std::to_string(*computed_sig));
      }
      e.signature = computed_sig;
    }
    known[e.name] = Resolved{e.alexander, e.genus, e.signature};
    out.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError("catalog line 1: missing header");
  return out;
}

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open catalog " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

std::vector<CatalogEntry> load_catalog() {
  return load_catalog(default_catalog_path());
}

std::vector<CatalogEntry> fibered_generators(
    const std::vector<CatalogEntry>& catalog) {
  std::vector<CatalogEntry> out;
  for (const auto& e : catalog) {
    if (is_fibered_alternating(e.alexander)) out.push_back(e);
  }
  return out;
}

std::vector<std::pair<std::string, HanselmanCheck>> section3_verdict(
    const std::vector<CatalogEntry>& catalog) {
  std::vector<std::pair<std::string, HanselmanCheck>> out;
  for (const auto& e : fibered_generators(catalog)) {
    out.emplace_back(e.name, hanselman_gate(e.alexander,
                                            e.signature.value_or(0), e.genus));
  }
  return out;
}

}  // namespace tbk
