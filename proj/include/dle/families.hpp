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

// Generators for the block-chain families that appear as extremal digraphs.
//
// Every family here is a chain of blocks V_1, ..., V_p laid out on
// consecutive labels. Block i sends every possible arc to each later block j
// and receives none back ("V_i dominates V_j one way"). Only the inside of a
// block differs between families:
//
//   fnk  complete digraphs of size k, plus one residual block of size r
//   bk   balanced complete bipartite digraphs, larger side on lower labels
//   tt   singleton blocks (the transitive tournament, u -> v iff u < v)
//   kd   one complete-digraph block

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dle/digraph.hpp"
#include "dle/errors.hpp"

namespace dle {

enum class FamilyKind { kFnk, kBk, kTransitiveTournament, kCompleteDigraph };

struct FamilySpec {
  FamilyKind kind = FamilyKind::kFnk;
  int n = 0;
  int k = 0;                        // fnk only
  std::optional<int> r_position;    // fnk only: 1-based index of the size-r block
  std::vector<int> parts;           // bk only

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

enum class BlockShape { kComplete, kBipartite };

// Chain of blocks with one-way domination from earlier to later blocks.
inline Digraph block_chain(const std::vector<int>& sizes, BlockShape shape) {
  int n = 0;
  for (int s : sizes) n += s;
  Digraph::check_capacity(n);
  std::vector<Row> rows(static_cast<std::size_t>(n), 0);
  auto span_mask = [](int lo, int hi) -> Row {  // bits lo..hi-1
    if (lo >= hi) return 0;
    const Row upper = hi == 64 ? ~Row{0} : ((Row{1} << hi) - 1);
    return upper & ~((Row{1} << lo) - 1);
  };
  int start = 0;
  for (int size : sizes) {
    const int end = start + size;
    const Row later = span_mask(end, n);
    if (shape == BlockShape::kComplete) {
      const Row block = span_mask(start, end);
      for (int u = start; u < end; ++u) {
        rows[static_cast<std::size_t>(u)] = (block & ~(Row{1} << u)) | later;
      }
    } else {
      const int mid = start + (size + 1) / 2;
      const Row side1 = span_mask(start, mid);
      const Row side2 = span_mask(mid, end);
      for (int u = start; u < end; ++u) {
        rows[static_cast<std::size_t>(u)] = (u < mid ? side2 : side1) | later;
      }
    }
    start = end;
  }
  return Digraph::from_rows(n, rows);
}

inline std::vector<int> block_index(const std::vector<int>& sizes) {
  std::vector<int> out;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    out.insert(out.end(), static_cast<std::size_t>(sizes[b]), static_cast<int>(b));
  }
  return out;
}

}  // namespace detail

/// Block sizes of F_{n,k} with the residual block (size r = n mod k) at
/// 1-based position `r_position`. The position must be given iff r > 0.
inline std::vector<int> fnk_block_sizes(int n, int k, std::optional<int> r_position) {
  if (k < 1) throw SpecError("fnk: block size k must be >= 1, got " + std::to_string(k));
  Digraph::check_capacity(n);
  const int q = n / k;
  const int r = n % k;
  if (r == 0 && r_position) {
    throw SpecError("fnk: n=" + std::to_string(n) + " is a multiple of k=" + std::to_string(k) +
                    ", no residual block to place");
  }
  if (r > 0 && !r_position) {
    throw SpecError("fnk: residual block of size " + std::to_string(r) + " needs a position 1.." +
                    std::to_string(q + 1));
  }
  if (r > 0 && (*r_position < 1 || *r_position > q + 1)) {
    throw SpecError("fnk: residual position " + std::to_string(*r_position) + " outside 1.." +
                    std::to_string(q + 1));
  }
  std::vector<int> sizes(static_cast<std::size_t>(q), k);
  if (r > 0) sizes.insert(sizes.begin() + (*r_position - 1), r);
  return sizes;
}

inline Digraph gen_fnk(int n, int k, std::optional<int> r_position) {
  return detail::block_chain(fnk_block_sizes(n, k, r_position), detail::BlockShape::kComplete);
}

/// The member with the residual block last (or F^0 when k divides n).
inline Digraph gen_fnk_residual_last(int n, int k) {
  if (k < 1) throw SpecError("fnk: block size k must be >= 1");
  const int q = n / k;
  return gen_fnk(n, k, n % k == 0 ? std::nullopt : std::optional<int>(q + 1));
}

/// All members F^1..F^{q+1} (r > 0), or the single F^0 (r = 0).
inline std::vector<Digraph> enumerate_fnk_members(int n, int k) {
  if (k < 1) throw SpecError("fnk: block size k must be >= 1");
  Digraph::check_capacity(n);
  const int q = n / k;
  std::vector<Digraph> out;
  if (n % k == 0) {
    out.push_back(gen_fnk(n, k, std::nullopt));
  } else {
    for (int pos = 1; pos <= q + 1; ++pos) out.push_back(gen_fnk(n, k, pos));
  }
  return out;
}

inline void validate_bk_parts(const std::vector<int>& parts) {
  if (parts.empty()) throw SpecError("bk: empty parts list");
  int odd = 0;
  for (int p : parts) {
    if (p < 1) throw SpecError("bk: part sizes must be >= 1, got " + std::to_string(p));
    odd += p % 2;
  }
  if (odd > 1) throw SpecError("bk: at most one part may be odd, got " + std::to_string(odd));
}

inline Digraph gen_bk(const std::vector<int>& parts) {
  validate_bk_parts(parts);
  return detail::block_chain(parts, detail::BlockShape::kBipartite);
}

/// Ordered compositions of n into parts {4,2}, followed (n odd) by a final
/// part in {3,1}. Sorted lexicographically descending.
inline std::vector<std::vector<int>> bk01_compositions(int n) {
  if (n < 1) throw RangeError("bk01: n must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Compositions of m into {4,2}; each finished prefix gets `tail` appended.
  auto rec = [&](auto&& self, int m, int tail) -> void {
    if (m == 0) {
      out.push_back(cur);
      if (tail > 0) out.back().push_back(tail);
      return;
    }
    for (int p : {4, 2}) {
      if (p <= m) {
        cur.push_back(p);
        self(self, m - p, tail);
        cur.pop_back();
      }
    }
  };
  if (n % 2 == 0) {
    rec(rec, n, 0);
  } else {
    for (int tail : {3, 1}) {
      if (tail <= n) rec(rec, n - tail, tail);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline std::vector<Digraph> enumerate_bk01_members(int n) {
  std::vector<Digraph> out;
  for (const auto& parts : bk01_compositions(n)) out.push_back(gen_bk(parts));
  return out;
}

inline Digraph gen_transitive_tournament(int n) {
  return detail::block_chain(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1),
                             detail::BlockShape::kComplete);
}

inline Digraph gen_complete_digraph(int n) {
  Digraph::check_capacity(n);
  return detail::block_chain({n}, detail::BlockShape::kComplete);
}

/// Block sizes in label order.
inline std::vector<int> block_sizes(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kFnk:
      return fnk_block_sizes(spec.n, spec.k, spec.r_position);
    case FamilyKind::kBk:
      validate_bk_parts(spec.parts);
      return spec.parts;
    case FamilyKind::kTransitiveTournament:
      Digraph::check_capacity(spec.n);
      return std::vector<int>(static_cast<std::size_t>(spec.n), 1);
    case FamilyKind::kCompleteDigraph:
      Digraph::check_capacity(spec.n);
      return {spec.n};
  }
  throw SpecError("unknown family kind");
}

inline Digraph realize(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kFnk:
      return gen_fnk(spec.n, spec.k, spec.r_position);
    case FamilyKind::kBk:
      return gen_bk(spec.parts);
    case FamilyKind::kTransitiveTournament:
      Digraph::check_capacity(spec.n);
      return gen_transitive_tournament(spec.n);
    case FamilyKind::kCompleteDigraph:
      return gen_complete_digraph(spec.n);
  }
  throw SpecError("unknown family kind");
}

/// Block index of every vertex of realize(spec).
inline std::vector<int> block_assignment(const FamilySpec& spec) {
  return detail::block_index(block_sizes(spec));
}

namespace detail {

inline int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("family spec: bad integer '" + std::string(text) + "' for " + std::string(what), 0);
  }
  return value;
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Parses `fnk:n=9,k=3,s=2`, `bk:parts=4+2+3`, `tt:n=7` or `kd:n=5`.
/// For fnk, `s` is the 1-based residual position; `s=0` or no `s` means F^0.
/// Only the syntax is checked here; realize() validates the parameters.
inline FamilySpec parse_family_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec '" + std::string(text) + "' lacks '<kind>:'", 0);
  }
  const std::string_view kind = text.substr(0, colon);
  FamilySpec spec;
  if (kind == "fnk") {
    spec.kind = FamilyKind::kFnk;
  } else if (kind == "bk") {
    spec.kind = FamilyKind::kBk;
  } else if (kind == "tt") {
    spec.kind = FamilyKind::kTransitiveTournament;
  } else if (kind == "kd") {
    spec.kind = FamilyKind::kCompleteDigraph;
  } else {
    throw ParseError("unknown family kind '" + std::string(kind) + "'", 0);
  }
  bool have_n = false;
  bool have_k = false;
  bool have_parts = false;
  for (std::string_view field : detail::split(text.substr(colon + 1), ',')) {
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("family spec field '" + std::string(field) + "' lacks '='", 0);
    }
    const std::string_view key = field.substr(0, eq);
    const std::string_view val = field.substr(eq + 1);
    if (key == "n" && spec.kind != FamilyKind::kBk) {
      spec.n = detail::parse_int(val, key);
      have_n = true;
    } else if (key == "k" && spec.kind == FamilyKind::kFnk) {
      spec.k = detail::parse_int(val, key);
      have_k = true;
    } else if (key == "s" && spec.kind == FamilyKind::kFnk) {
      const int s = detail::parse_int(val, key);
      if (s != 0) spec.r_position = s;
    } else if (key == "parts" && spec.kind == FamilyKind::kBk) {
      for (std::string_view p : detail::split(val, '+')) spec.parts.push_back(detail::parse_int(p, key));
      have_parts = true;
    } else {
      throw ParseError("unexpected field '" + std::string(key) + "' for kind '" + std::string(kind) + "'", 0);
    }
  }
  if (spec.kind == FamilyKind::kBk) {
    if (!have_parts) throw ParseError("bk spec needs parts=", 0);
    spec.n = 0;
    for (int p : spec.parts) spec.n += p;
  } else if (!have_n) {
    throw ParseError("family spec needs n=", 0);
  }
  if (spec.kind == FamilyKind::kFnk && !have_k) throw ParseError("fnk spec needs k=", 0);
  return spec;
}

inline std::string to_string(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kFnk:
      return "fnk:n=" + std::to_string(spec.n) + ",k=" + std::to_string(spec.k) +
             ",s=" + std::to_string(spec.r_position.value_or(0));
    case FamilyKind::kBk: {
      std::string out = "bk:parts=";
      for (std::size_t i = 0; i < spec.parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(spec.parts[i]);
      }
      return out;
    }
    case FamilyKind::kTransitiveTournament:
      return "tt:n=" + std::to_string(spec.n);
    case FamilyKind::kCompleteDigraph:
      return "kd:n=" + std::to_string(spec.n);
  }
  return {};
}

}  // namespace dle
