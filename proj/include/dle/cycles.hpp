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

#include <array>
#include <bit>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dle/digraph.hpp"
#include "dle/errors.hpp"

namespace dle {

/// Directed cycle v0 -> v1 -> ... -> v_{l-1} -> v0 on distinct vertices.
struct CycleWitness {
  std::vector<int> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    }
    return out;
  }
};

namespace detail {

// Depth-first search for a cycle of exactly `len` arcs. Each cycle is found
// only from its smallest vertex s: the walk stays inside the strong
// component of s in G[{v >= s}], and a vertex is entered only if it can
// still get back to s in the arcs that remain.
class ExactCycleSearch {
 public:
  ExactCycleSearch(std::span<const Row> rows, int len) : rows_(rows), n_(static_cast<int>(rows.size())), len_(len) {}

  bool run(std::vector<int>* path_out) {
    for (int s = 0; s + len_ <= n_; ++s) {
      const Row valid = n_ == 64 ? ~Row{0} : ((Row{1} << n_) - 1);
      const Row allowed = (~Row{0} << s) & valid;
      const Row scc = reach(s, allowed, false) & reach(s, allowed, true);
      if (std::popcount(scc) < len_) continue;
      distances_to(s, scc);
      path_.assign(1, s);
      if (extend(s, Row{1} << s, scc)) {
        if (path_out) *path_out = path_;
        return true;
      }
    }
    return false;
  }

 private:
  Row preds(int v, Row within) const {
    Row out = 0;
    for (Row w = within; w != 0; w &= w - 1) {
      const int u = std::countr_zero(w);
      if ((rows_[static_cast<std::size_t>(u)] >> v) & 1U) out |= Row{1} << u;
    }
    return out;
  }

  Row reach(int s, Row allowed, bool backward) const {
    Row seen = Row{1} << s;
    Row frontier = seen;
    while (frontier != 0) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1) {
        const int u = std::countr_zero(f);
        next |= backward ? preds(u, allowed) : rows_[static_cast<std::size_t>(u)];
      }
      frontier = next & allowed & ~seen;
      seen |= frontier;
    }
    return seen;
  }

  // dist_[v] = fewest arcs from v back to s inside `scc`.
  void distances_to(int s, Row scc) {
    dist_.fill(n_ + 1);
    dist_[static_cast<std::size_t>(s)] = 0;
    Row seen = Row{1} << s;
    Row frontier = seen;
    for (int d = 1; frontier != 0; ++d) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1) next |= preds(std::countr_zero(f), scc);
      frontier = next & ~seen;
      for (Row f = frontier; f != 0; f &= f - 1) dist_[static_cast<std::size_t>(std::countr_zero(f))] = d;
      seen |= frontier;
    }
  }

  bool extend(int u, Row visited, Row scc) {
    const int used = static_cast<int>(path_.size()) - 1;
    const int s = path_.front();
    if (used == len_ - 1) return (rows_[static_cast<std::size_t>(u)] >> s) & 1U;
    const int left_after = len_ - used - 1;
    for (Row cand = rows_[static_cast<std::size_t>(u)] & scc & ~visited; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      if (dist_[static_cast<std::size_t>(v)] > left_after) continue;
      path_.push_back(v);
      if (extend(v, visited | (Row{1} << v), scc)) return true;
      path_.pop_back();
    }
    return false;
  }

  std::span<const Row> rows_;
  int n_;
  int len_;
  std::vector<int> path_;
  std::array<int, Digraph::kMaxVertices> dist_{};
};

inline void check_cycle_length(int n, int len) {
  if (len < 2 || len > n) {
    throw RangeError("cycle length " + std::to_string(len) + " outside 2.." + std::to_string(n));
  }
}

}  // namespace detail

/// A directed cycle of exactly `len` arcs, if one exists. 2 <= len <= n.
inline std::optional<CycleWitness> find_cycle_of_length(const Digraph& g, int len) {
  detail::check_cycle_length(g.size(), len);
  std::vector<int> path;
  if (!detail::ExactCycleSearch(g.rows(), len).run(&path)) return std::nullopt;
  return CycleWitness{std::move(path)};
}

/// No directed cycle of exactly `len` arcs.
inline bool is_ck_free(const Digraph& g, int len) {
  detail::check_cycle_length(g.size(), len);
  return !detail::ExactCycleSearch(g.rows(), len).run(nullptr);
}

}  // namespace dle
