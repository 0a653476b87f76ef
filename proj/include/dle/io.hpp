// Copyright 2026 The digraph-le Authors
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

#pragma once

// Text formats.
//
// Arclist (the interchange format):
//
//   DIGRAPH <n> <e>
//   <u> <v>          e lines, 0-based, sorted lexicographically on output
//
// DOT and JSON are output-only. Every JSON document carries "schema": 1.

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dle/canonical.hpp"
#include "dle/closed_forms.hpp"
#include "dle/digraph.hpp"
#include "dle/errors.hpp"
#include "dle/invariants.hpp"
#include "dle/search.hpp"

namespace dle {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline std::string to_arclist(const Digraph& g) {
  std::string out = "DIGRAPH " + std::to_string(g.size()) + " " + std::to_string(g.arc_count()) + "\n";
  for (const auto& [u, v] : g.arcs()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline long long parse_count(const std::string& tok, int line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + tok + "'", line);
  }
  if (used != tok.size() || v < 0) throw ParseError("expected a non-negative integer, got '" + tok + "'", line);
  return v;
}

}  // namespace detail

/// Parses the arclist format. Blank lines after the last arc are ignored;
/// anything else that deviates raises ParseError with its line number.
inline Digraph parse_arclist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line()) throw ParseError("empty input", 1);
  const auto head = detail::tokens(line);
  if (head.size() != 3 || head[0] != "DIGRAPH") throw ParseError("expected header 'DIGRAPH <n> <e>'", lineno);
  const long long n = detail::parse_count(head[1], lineno);
  const long long e = detail::parse_count(head[2], lineno);
  if (n < 1 || n > Digraph::kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " outside 1..64", lineno);
  }
  DigraphBuilder b(static_cast<int>(n));
  std::set<Arc> seen;
  for (long long i = 0; i < e; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(e) + " arcs, found " + std::to_string(i), lineno + 1);
    const auto t = detail::tokens(line);
    if (t.size() != 2) throw ParseError("expected '<u> <v>'", lineno);
    const long long u = detail::parse_count(t[0], lineno);
    const long long v = detail::parse_count(t[1], lineno);
    if (u >= n || v >= n) throw ParseError("vertex index outside 0.." + std::to_string(n - 1), lineno);
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lineno);
    if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second) throw ParseError("duplicate arc", lineno);
    b.add_arc(static_cast<int>(u), static_cast<int>(v));
  }
  while (next_line()) {
    if (!detail::tokens(line).empty()) throw ParseError("unexpected content after the last arc", lineno);
  }
  return b.build();
}

/// DOT digraph. With `blocks`, each vertex label carries its 1-based block.
inline std::string to_dot(const Digraph& g, const std::optional<std::vector<int>>& blocks = std::nullopt) {
  std::string out = "digraph G {\n";
  for (int v = 0; v < g.size(); ++v) {
    out += "  " + std::to_string(v);
    if (blocks) {
      out += " [label=\"" + std::to_string(v) + " (V" +
             std::to_string((*blocks)[static_cast<std::size_t>(v)] + 1) + ")\"]";
    }
    out += ";\n";
  }
  for (const auto& [u, v] : g.arcs()) out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

inline Json to_json(const Digraph& g) {
  Json arcs = Json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back({u, v});
  return Json{{"schema", kSchemaVersion}, {"n", g.size()}, {"e", g.arc_count()}, {"arcs", std::move(arcs)}};
}

inline Json to_json(const InvariantBundle& b) {
  return Json{{"schema", kSchemaVersion}, {"le", b.le},   {"m1", b.m1},
              {"c2", b.c2},                {"e", b.e},     {"degseq", b.degseq.values()}};
}

inline Json to_json(const ExactValue& v) {
  return Json{{"value", v.value}, {"numerator", v.numerator}, {"denominator", v.denominator}, {"source", v.source}};
}

/// Search report. `elapsed_ms` is left out unless asked for, so reports of
/// the same search are byte-identical.
inline Json to_json(const ExtremalSearchReport& r, bool with_timing = false) {
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    witnesses.push_back({{"arclist", to_arclist(r.witnesses[i])}, {"canonical", r.witness_forms[i].hex()}});
  }
  Json out{{"schema", kSchemaVersion},
           {"n", r.n},
           {"forbidden_len", r.forbidden_len},
           {"objective", to_string(r.objective)},
           {"scope", to_string(r.scope)},
           {"max_value", r.max_value},
           {"witnesses", std::move(witnesses)},
           {"searched_count", r.searched_count}};
  if (with_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

}  // namespace dle
