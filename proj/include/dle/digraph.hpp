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

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dle/errors.hpp"

namespace dle {

using Row = std::uint64_t;
using Arc = std::pair<int, int>;

/// Loop-free digraph on at most 64 labeled vertices 0..n-1.
///
/// Row u holds the out-neighbourhood of u as a bit set: bit v is set iff the
/// arc (u,v) is present. Values are immutable once built; use DigraphBuilder
/// or build_digraph() to make one. Two digraphs compare by (n, rows), which
/// gives reports a deterministic order.
class Digraph {
 public:
  static constexpr int kMaxVertices = 64;

  /// Validates and adopts raw rows. Throws CapacityError, LoopError or
  /// RangeError (bit beyond n-1).
  static Digraph from_rows(int n, std::span<const Row> rows) {
    check_capacity(n);
    if (static_cast<int>(rows.size()) != n) {
      throw RangeError("row count " + std::to_string(rows.size()) +
                       " does not match n=" + std::to_string(n));
    }
    Digraph g;
    g.n_ = n;
    const Row valid = n == 64 ? ~Row{0} : ((Row{1} << n) - 1);
    for (int u = 0; u < n; ++u) {
      const Row r = rows[static_cast<std::size_t>(u)];
      if ((r >> u) & 1U) {
        throw LoopError("loop at vertex " + std::to_string(u));
      }
      if (r & ~valid) {
        throw RangeError("row " + std::to_string(u) +
                         " names a vertex outside 0.." + std::to_string(n - 1));
      }
      g.rows_[static_cast<std::size_t>(u)] = r;
    }
    return g;
  }

  static void check_capacity(int n) {
    if (n < 1 || n > kMaxVertices) {
      throw CapacityError("vertex count " + std::to_string(n) +
                          " outside 1.." + std::to_string(kMaxVertices));
    }
  }

  int size() const noexcept { return n_; }

  Row row(int u) const noexcept { return rows_[static_cast<std::size_t>(u)]; }
  std::span<const Row> rows() const noexcept {
    return {rows_.data(), static_cast<std::size_t>(n_)};
  }

  bool has_arc(int u, int v) const noexcept { return (row(u) >> v) & 1U; }

  int out_degree(int u) const noexcept { return std::popcount(row(u)); }

  int in_degree(int v) const noexcept {
    int d = 0;
    for (int u = 0; u < n_; ++u) d += has_arc(u, v) ? 1 : 0;
    return d;
  }

  int arc_count() const noexcept {
    int e = 0;
    for (int u = 0; u < n_; ++u) e += out_degree(u);
    return e;
  }

  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u) {
      for (Row r = row(u); r != 0; r &= r - 1) {
        out.emplace_back(u, std::countr_zero(r));
      }
    }
    return out;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;
  friend auto operator<=>(const Digraph&, const Digraph&) = default;

 private:
  Digraph() = default;

  int n_ = 0;
  // Rows beyond n_ stay zero, so the defaulted comparisons are by (n, rows).
  std::array<Row, kMaxVertices> rows_{};
};

/// Single-owner accumulator of arcs; duplicates are idempotent.
class DigraphBuilder {
 public:
  explicit DigraphBuilder(int n) : n_(n) {
    Digraph::check_capacity(n);
    rows_.assign(static_cast<std::size_t>(n), 0);
  }

  int size() const noexcept { return n_; }

  DigraphBuilder& add_arc(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw RangeError("arc (" + std::to_string(u) + "," + std::to_string(v) +
                       ") outside 0.." + std::to_string(n_ - 1));
    }
    if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
    rows_[static_cast<std::size_t>(u)] |= Row{1} << v;
    return *this;
  }

  Digraph build() const { return Digraph::from_rows(n_, rows_); }

 private:
  int n_;
  std::vector<Row> rows_;
};

inline Digraph build_digraph(int n, std::span<const Arc> arcs) {
  DigraphBuilder b(n);
  for (const auto& [u, v] : arcs) b.add_arc(u, v);
  return b.build();
}

inline Digraph build_digraph(int n, std::initializer_list<Arc> arcs) {
  return build_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

/// Outdegrees sorted non-increasing, with prefix sums: prefix[t] is the sum
/// of the t largest outdegrees (prefix[0] = 0, prefix[n] = e).
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
    prefix_.assign(values_.size() + 1, 0);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      prefix_[i + 1] = prefix_[i] + values_[i];
    }
  }

  const std::vector<int>& values() const noexcept { return values_; }
  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }

  /// Sum of the t largest values, 1 <= t <= n.
  std::int64_t top_sum(int t) const {
    if (t < 1 || t > size()) {
      throw RangeError("t=" + std::to_string(t) + " outside 1.." +
                       std::to_string(size()));
    }
    return prefix_[static_cast<std::size_t>(t)];
  }

  friend bool operator==(const DegreeSequence& a, const DegreeSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<int> values_;
  std::vector<std::int64_t> prefix_;
};

inline DegreeSequence out_degree_sequence(const Digraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.size()));
  for (int u = 0; u < g.size(); ++u) d[static_cast<std::size_t>(u)] = g.out_degree(u);
  return DegreeSequence(std::move(d));
}

inline std::vector<int> in_degrees(const Digraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.size()), 0);
  for (int u = 0; u < g.size(); ++u) {
    for (Row r = g.row(u); r != 0; r &= r - 1) ++d[static_cast<std::size_t>(std::countr_zero(r))];
  }
  return d;
}

/// Number of unordered pairs {u,v} joined in both directions.
inline int digon_count(const Digraph& g) {
  int both = 0;
  for (int u = 0; u < g.size(); ++u) {
    for (Row r = g.row(u); r != 0; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (v > u && g.has_arc(v, u)) ++both;
    }
  }
  return both;
}

/// Relabels vertex u as perm[u]. Throws RangeError unless perm is a
/// bijection on 0..n-1.
inline Digraph permute(const Digraph& g, std::span<const int> perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n) {
    throw RangeError("permutation length " + std::to_string(perm.size()) +
                     " does not match n=" + std::to_string(n));
  }
  Row seen = 0;
  for (int img : perm) {
    if (img < 0 || img >= n || ((seen >> img) & 1U)) {
      throw RangeError("map is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen |= Row{1} << img;
  }
  std::vector<Row> rows(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    Row out = 0;
    for (Row r = g.row(u); r != 0; r &= r - 1) {
      out |= Row{1} << perm[static_cast<std::size_t>(std::countr_zero(r))];
    }
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = out;
  }
  return Digraph::from_rows(n, rows);
}

/// True iff the underlying undirected graph is connected.
inline bool is_weakly_connected(const Digraph& g) {
  const int n = g.size();
  // Symmetrise, then flood from vertex 0.
  std::array<Row, Digraph::kMaxVertices> und{};
  for (int u = 0; u < n; ++u) {
    und[static_cast<std::size_t>(u)] |= g.row(u);
    for (Row r = g.row(u); r != 0; r &= r - 1) {
      und[static_cast<std::size_t>(std::countr_zero(r))] |= Row{1} << u;
    }
  }
  Row reached = 1;
  Row frontier = 1;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= und[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~reached;
    reached |= next;
  }
  return std::popcount(reached) == n;
}

/// Dense integer Laplacian L = D+ - A.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(const Digraph& g)
      : n_(g.size()), entries_(static_cast<std::size_t>(n_ * n_), 0) {
    for (int i = 0; i < n_; ++i) {
      at(i, i) = g.out_degree(i);
      for (int j = 0; j < n_; ++j) {
        if (g.has_arc(i, j)) at(i, j) = -1;
      }
    }
  }

  int size() const noexcept { return n_; }
  std::int64_t operator()(int i, int j) const noexcept {
    return entries_[static_cast<std::size_t>(i * n_ + j)];
  }

 private:
  std::int64_t& at(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }

  int n_;
  std::vector<std::int64_t> entries_;
};

}  // namespace dle
