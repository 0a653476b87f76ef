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

// Exact canonical labeling and isomorphism testing for small digraphs.
//
// canonical_label() colours vertices by (outdegree, indegree), refines the
// colouring by neighbour colours until it is stable, and then searches every
// relabeling that keeps colour classes in colour order. The relabeled
// adjacency matrix minimal in "growth order" (position p contributes its
// arcs to and from positions 0..p-1) is the canonical one. Colours are
// ranked by isomorphism-invariant signatures, so the minimum is taken over
// the same set of matrices for every member of an isomorphism class; there
// is no hashing and no heuristic cut-off.
//
// are_isomorphic() is a separate backtracking matcher so the two can be
// tested against each other.

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "dle/digraph.hpp"
#include "dle/errors.hpp"

namespace dle {

inline constexpr int kMaxCanonicalOrder = 10;

/// Canonical serialization: byte n, then each row of the canonically
/// relabeled digraph in ceil(n/8) little-endian bytes.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
      out += kDigits[b >> 4];
      out += kDigits[b & 0xF];
    }
    return out;
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

inline void check_canonical_order(int n) {
  if (n > kMaxCanonicalOrder) {
    throw RangeError("canonical labeling supports n <= " + std::to_string(kMaxCanonicalOrder) +
                     ", got " + std::to_string(n));
  }
}

// Stable colouring, colours 0..c-1 ranked by invariant signatures.
inline std::vector<int> refined_colours(const Digraph& g) {
  const int n = g.size();
  const std::vector<int> indeg = in_degrees(g);
  using Signature = std::tuple<int, std::vector<int>, std::vector<int>>;
  std::vector<Signature> sig(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    sig[static_cast<std::size_t>(v)] = {g.out_degree(v), {indeg[static_cast<std::size_t>(v)]}, {}};
  }
  std::vector<int> colour(static_cast<std::size_t>(n));
  int classes = 0;
  while (true) {
    std::vector<Signature> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) - distinct.begin());
    }
    if (static_cast<int>(distinct.size()) == classes) return colour;
    classes = static_cast<int>(distinct.size());
    for (int v = 0; v < n; ++v) {
      std::vector<int> outc;
      std::vector<int> inc;
      for (int w = 0; w < n; ++w) {
        if (g.has_arc(v, w)) outc.push_back(colour[static_cast<std::size_t>(w)]);
        if (g.has_arc(w, v)) inc.push_back(colour[static_cast<std::size_t>(w)]);
      }
      std::sort(outc.begin(), outc.end());
      std::sort(inc.begin(), inc.end());
      // The previous colour leads, so refinement never merges classes.
      sig[static_cast<std::size_t>(v)] = {colour[static_cast<std::size_t>(v)], std::move(outc), std::move(inc)};
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Digraph& g) : g_(g), n_(g.size()) {
    colour_ = refined_colours(g);
    cell_colour_ = colour_;
    std::sort(cell_colour_.begin(), cell_colour_.end());
    order_.assign(static_cast<std::size_t>(n_), -1);
    key_.assign(static_cast<std::size_t>(n_), 0);
  }

  // Vertex placed at each canonical position.
  std::vector<int> run() {
    descend(0, 0, true);
    return best_order_;
  }

 private:
  // Arcs between the vertex at position p and positions 0..p-1, packed so
  // that integer order matches lexicographic order.
  std::uint64_t segment(int p, int v) const {
    std::uint64_t seg = 0;
    for (int j = 0; j < p; ++j) {
      const int w = order_[static_cast<std::size_t>(j)];
      seg = (seg << 2) | (g_.has_arc(v, w) ? 2U : 0U) | (g_.has_arc(w, v) ? 1U : 0U);
    }
    return seg;
  }

  // `below` means positions 0..p-1 already compare strictly less than the
  // best key found so far.
  void descend(int p, Row used, bool below) {
    if (p == n_) {
      if (below) {
        best_order_ = order_;
        best_key_ = key_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (((used >> v) & 1U) || colour_[static_cast<std::size_t>(v)] != cell_colour_[static_cast<std::size_t>(p)]) {
        continue;
      }
      order_[static_cast<std::size_t>(p)] = v;
      const std::uint64_t seg = segment(p, v);
      bool child_below = below;
      if (!below) {
        const std::uint64_t best = best_key_[static_cast<std::size_t>(p)];
        if (seg > best) continue;
        child_below = seg < best;
      }
      key_[static_cast<std::size_t>(p)] = seg;
      descend(p + 1, used | (Row{1} << v), child_below);
      // The subtree may have replaced the best key; re-compare our prefix.
      if (below) below = prefix_below_best(p);
    }
  }

  bool prefix_below_best(int p) const {
    if (best_order_.empty()) return true;
    for (int j = 0; j < p; ++j) {
      if (key_[static_cast<std::size_t>(j)] != best_key_[static_cast<std::size_t>(j)]) {
        return key_[static_cast<std::size_t>(j)] < best_key_[static_cast<std::size_t>(j)];
      }
    }
    return false;
  }

  const Digraph& g_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> cell_colour_;
  std::vector<int> order_;
  std::vector<std::uint64_t> key_;
  std::vector<int> best_order_;
  std::vector<std::uint64_t> best_key_;
};

}  // namespace detail

/// Canonically relabeled copy of g together with its serialization.
struct CanonicalResult {
  Digraph graph;
  CanonicalForm form;
};

inline CanonicalResult canonicalize(const Digraph& g) {
  detail::check_canonical_order(g.size());
  const int n = g.size();
  const std::vector<int> order = detail::CanonicalSearch(g).run();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
  Digraph canon = permute(g, perm);
  CanonicalForm form;
  const int row_bytes = (n + 7) / 8;
  form.bytes.push_back(static_cast<std::uint8_t>(n));
  for (int u = 0; u < n; ++u) {
    const Row r = canon.row(u);
    for (int b = 0; b < row_bytes; ++b) form.bytes.push_back(static_cast<std::uint8_t>(r >> (8 * b)));
  }
  return {std::move(canon), std::move(form)};
}

inline CanonicalForm canonical_label(const Digraph& g) { return canonicalize(g).form; }

namespace detail {

class IsoMatcher {
 public:
  IsoMatcher(const Digraph& g, const Digraph& h) : g_(g), h_(h), n_(g.size()) {
    const auto gin = in_degrees(g);
    const auto hin = in_degrees(h);
    for (int v = 0; v < n_; ++v) {
      gdeg_.push_back({g.out_degree(v), gin[static_cast<std::size_t>(v)]});
      hdeg_.push_back({h.out_degree(v), hin[static_cast<std::size_t>(v)]});
    }
    map_.assign(static_cast<std::size_t>(n_), -1);
  }

  bool run() {
    auto a = gdeg_;
    auto b = hdeg_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
    return extend(0, 0);
  }

 private:
  bool extend(int v, Row used) {
    if (v == n_) return true;
    for (int w = 0; w < n_; ++w) {
      if (((used >> w) & 1U) || hdeg_[static_cast<std::size_t>(w)] != gdeg_[static_cast<std::size_t>(v)]) continue;
      bool consistent = g_.has_arc(v, v) == h_.has_arc(w, w);
      for (int u = 0; u < v && consistent; ++u) {
        const int x = map_[static_cast<std::size_t>(u)];
        consistent = g_.has_arc(u, v) == h_.has_arc(x, w) && g_.has_arc(v, u) == h_.has_arc(w, x);
      }
      if (!consistent) continue;
      map_[static_cast<std::size_t>(v)] = w;
      if (extend(v + 1, used | (Row{1} << w))) return true;
    }
    map_[static_cast<std::size_t>(v)] = -1;
    return false;
  }

  const Digraph& g_;
  const Digraph& h_;
  int n_;
  std::vector<std::pair<int, int>> gdeg_;
  std::vector<std::pair<int, int>> hdeg_;
  std::vector<int> map_;
};

}  // namespace detail

/// Some relabeling maps g onto h. Both must have the same order n <= 10.
inline bool are_isomorphic(const Digraph& g, const Digraph& h) {
  if (g.size() != h.size()) {
    throw RangeError("orders differ: " + std::to_string(g.size()) + " vs " + std::to_string(h.size()));
  }
  detail::check_canonical_order(g.size());
  if (g.arc_count() != h.arc_count()) return false;
  return detail::IsoMatcher(g, h).run();
}

}  // namespace dle
