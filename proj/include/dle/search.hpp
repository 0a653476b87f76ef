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

// Exhaustive extremal search over every loop-free digraph of small order.
//
// A digraph on n labeled vertices is a mask over the n(n-1) ordered pairs in
// row-major order with the diagonal skipped: bit u(n-1) + j is the arc from
// u to the j-th vertex of 0..n-1 other than u. Row u therefore occupies the
// contiguous bits [u(n-1), (u+1)(n-1)).
//
// The mask space is cut into contiguous chunks by its high bits. Workers
// claim chunks from a shared counter and each produces (local maximum,
// canonical witnesses at that maximum). Chunk results are merged in chunk
// order, so the report is identical for any worker count.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "dle/canonical.hpp"
#include "dle/cycles.hpp"
#include "dle/digraph.hpp"
#include "dle/errors.hpp"
#include "dle/invariants.hpp"

namespace dle {

using Mask = std::uint64_t;

inline constexpr int kMaxEnumerationOrder = 6;
inline constexpr int kDefaultEnumerationOrder = 5;

enum class Objective { kLaplacianEnergy, kFirstZagreb, kArcs };
enum class Scope { kAll, kConnectedOnly };

inline std::string to_string(Objective o) {
  switch (o) {
    case Objective::kLaplacianEnergy: return "le";
    case Objective::kFirstZagreb: return "m1";
    case Objective::kArcs: return "arcs";
  }
  return "?";
}

inline std::string to_string(Scope s) { return s == Scope::kAll ? "all" : "connected_only"; }

inline std::int64_t evaluate(Objective o, const Digraph& g) {
  switch (o) {
    case Objective::kLaplacianEnergy: return laplacian_energy(g);
    case Objective::kFirstZagreb: return first_zagreb(g);
    case Objective::kArcs: return g.arc_count();
  }
  return 0;
}

inline int pair_count(int n) { return n * (n - 1); }

/// Rows of the digraph encoded by `mask`.
inline void rows_from_mask(int n, Mask mask, std::span<Row> rows) {
  const int width = n - 1;
  const Mask row_bits = (Mask{1} << width) - 1;
  const int count = std::min(n, static_cast<int>(rows.size()));
  for (int u = 0; u < count; ++u) {
    const Mask x = (mask >> (u * width)) & row_bits;
    const Mask low = x & ((Mask{1} << u) - 1);
    rows[static_cast<std::size_t>(u)] = low | ((x >> u) << (u + 1));
  }
}

namespace detail {
// First n rows of a fixed-size buffer; never longer than the buffer.
inline std::span<const Row> row_view(const std::array<Row, kMaxEnumerationOrder>& rows, int n) {
  return {rows.data(), static_cast<std::size_t>(std::clamp(n, 0, kMaxEnumerationOrder))};
}
}  // namespace detail

inline Digraph digraph_from_mask(int n, Mask mask) {
  std::array<Row, kMaxEnumerationOrder> rows{};
  rows_from_mask(n, mask, rows);
  return Digraph::from_rows(n, detail::row_view(rows, n));
}

inline Mask mask_of(const Digraph& g) {
  const int n = g.size();
  if (n > kMaxEnumerationOrder) throw RangeError("mask encoding supports n <= 6");
  Mask mask = 0;
  for (int u = 0; u < n; ++u) {
    const Row r = g.row(u);
    const Row low = r & ((Row{1} << u) - 1);
    const Row high = r >> (u + 1);
    mask |= (low | (high << u)) << (u * (n - 1));
  }
  return mask;
}

namespace detail {
inline void check_enumeration_order(int n, int cap) {
  if (n < 1 || n > cap) {
    throw RangeError("enumeration supports 1 <= n <= " + std::to_string(cap) + ", got " + std::to_string(n));
  }
}
}  // namespace detail

/// Calls visit(mask, digraph) for every mask in [lo, hi).
template <typename Visitor>
void enumerate_digraph_range(int n, Mask lo, Mask hi, Visitor&& visit) {
  detail::check_enumeration_order(n, kMaxEnumerationOrder);
  std::array<Row, kMaxEnumerationOrder> rows{};
  for (Mask m = lo; m < hi; ++m) {
    rows_from_mask(n, m, rows);
    visit(m, Digraph::from_rows(n, detail::row_view(rows, n)));
  }
}

/// Every loop-free digraph on n labeled vertices, once each, in mask order.
template <typename Visitor>
void enumerate_digraphs(int n, Visitor&& visit) {
  detail::check_enumeration_order(n, kMaxEnumerationOrder);
  enumerate_digraph_range(n, 0, Mask{1} << pair_count(n), std::forward<Visitor>(visit));
}

struct SearchOptions {
  int n = 4;
  int forbidden_len = 3;
  Objective objective = Objective::kLaplacianEnergy;
  Scope scope = Scope::kAll;
  int jobs = 1;
  /// n = 6 walks 2^30 masks; it must be asked for explicitly.
  bool allow_n6 = false;
};

struct ExtremalSearchReport {
  int n = 0;
  int forbidden_len = 0;
  Objective objective = Objective::kLaplacianEnergy;
  Scope scope = Scope::kAll;
  std::int64_t max_value = 0;
  /// Canonically relabeled witnesses, one per isomorphism class, sorted by
  /// canonical form.
  std::vector<Digraph> witnesses;
  std::vector<CanonicalForm> witness_forms;
  /// Masks covered: every one was either evaluated or skipped as a
  /// superset of a digraph that already holds the forbidden cycle.
  std::uint64_t searched_count = 0;
  std::int64_t elapsed_ms = 0;
};

namespace detail {

struct ChunkResult {
  std::int64_t best = -1;
  std::set<CanonicalForm> forms;
};

class ExtremalSearch {
 public:
  explicit ExtremalSearch(const SearchOptions& opt) : opt_(opt), n_(opt.n), bits_(pair_count(opt.n)) {
    chunk_bits_ = std::min(bits_, n_ <= 5 ? 8 : 12);
    // Cycles longer than n cannot occur; the constraint is vacuous.
    constrained_ = opt.forbidden_len <= n_;
  }

  ExtremalSearchReport run() {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t chunks = std::size_t{1} << chunk_bits_;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t c = next++; c < chunks; c = next++) results[c] = run_chunk(static_cast<Mask>(c));
    };
    const int jobs = std::max(1, opt_.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    ExtremalSearchReport report;
    report.n = n_;
    report.forbidden_len = opt_.forbidden_len;
    report.objective = opt_.objective;
    report.scope = opt_.scope;
    report.searched_count = std::uint64_t{1} << bits_;
    std::int64_t best = -1;
    for (const auto& r : results) best = std::max(best, r.best);
    std::set<CanonicalForm> forms;
    for (const auto& r : results) {
      if (r.best == best) forms.insert(r.forms.begin(), r.forms.end());
    }
    report.max_value = best;
    for (const auto& f : forms) {
      report.witness_forms.push_back(f);
      report.witnesses.push_back(decode(f));
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start).count();
    return report;
  }

 private:
  Digraph decode(const CanonicalForm& f) const {
    std::vector<Row> rows(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u) rows[static_cast<std::size_t>(u)] = f.bytes[static_cast<std::size_t>(1 + u)];
    return Digraph::from_rows(n_, rows);
  }

  bool is_free(std::span<const Row> rows) const {
    return !constrained_ || !ExactCycleSearch(rows, opt_.forbidden_len).run(nullptr);
  }

  void consider(const Digraph& g, ChunkResult& out) {
    if (opt_.scope == Scope::kConnectedOnly && !is_weakly_connected(g)) return;
    const std::int64_t value = evaluate(opt_.objective, g);
    // Values below a maximum already seen elsewhere cannot be reported.
    if (value < out.best || value < global_floor_.load(std::memory_order_relaxed)) return;
    if (value > out.best) {
      out.best = value;
      out.forms.clear();
      std::int64_t floor = global_floor_.load(std::memory_order_relaxed);
      while (floor < value && !global_floor_.compare_exchange_weak(floor, value)) {
      }
    }
    out.forms.insert(canonical_label(g));
  }

  ChunkResult run_chunk(Mask chunk) {
    ChunkResult out;
    const int low_bits = bits_ - chunk_bits_;
    const Mask lo = chunk << low_bits;
    const Mask hi = (chunk + 1) << low_bits;
    if (opt_.objective == Objective::kArcs) {
      // Freeness is inherited by subdigraphs, so a non-free partial mask
      // rules out everything that extends it.
      std::array<Row, kMaxEnumerationOrder> rows{};
      rows_from_mask(n_, lo, rows);
      if (is_free(std::span<const Row>(rows.data(), static_cast<std::size_t>(n_)))) {
        extend(lo, low_bits - 1, out);
      }
    } else {
      std::array<Row, kMaxEnumerationOrder> rows{};
      for (Mask m = lo; m < hi; ++m) {
        rows_from_mask(n_, m, rows);
        const std::span<const Row> view(rows.data(), static_cast<std::size_t>(n_));
        if (is_free(view)) consider(Digraph::from_rows(n_, view), out);
      }
    }
    return out;
  }

  // Decides bits `bit`, bit-1, ..., 0 of a mask whose higher bits are fixed.
  void extend(Mask mask, int bit, ChunkResult& out) {
    if (bit < 0) {
      consider(digraph_from_mask(n_, mask), out);
      return;
    }
    extend(mask, bit - 1, out);
    const Mask with = mask | (Mask{1} << bit);
    std::array<Row, kMaxEnumerationOrder> rows{};
    rows_from_mask(n_, with, rows);
    if (is_free(std::span<const Row>(rows.data(), static_cast<std::size_t>(n_)))) extend(with, bit - 1, out);
  }

  SearchOptions opt_;
  int n_;
  int bits_;
  int chunk_bits_ = 0;
  bool constrained_ = true;
  std::atomic<std::int64_t> global_floor_{-1};
};

}  // namespace detail

/// Exact maximum of the objective over all digraphs of order n (in scope)
/// with no directed cycle of length exactly `forbidden_len`, and every
/// maximizer up to isomorphism.
inline ExtremalSearchReport search_extremal(const SearchOptions& opt) {
  detail::check_enumeration_order(opt.n, opt.allow_n6 ? kMaxEnumerationOrder : kDefaultEnumerationOrder);
  if (opt.forbidden_len < 2) {
    throw RangeError("forbidden cycle length must be >= 2, got " + std::to_string(opt.forbidden_len));
  }
  return detail::ExtremalSearch(opt).run();
}

}  // namespace dle
