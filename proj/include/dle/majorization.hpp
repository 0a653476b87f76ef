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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dle/digraph.hpp"
#include "dle/errors.hpp"
#include "dle/families.hpp"
#include "dle/invariants.hpp"

namespace dle {

/// Non-increasing integer sequence.
class SortedSequence {
 public:
  /// Throws RangeError if `values` is not non-increasing.
  explicit SortedSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (!std::is_sorted(values_.begin(), values_.end(), std::greater<>())) {
      throw RangeError("sequence is not non-increasing");
    }
  }

  static SortedSequence sorted(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    return SortedSequence(std::move(values));
  }

  static SortedSequence of(const DegreeSequence& d) {
    return SortedSequence(std::vector<std::int64_t>(d.values().begin(), d.values().end()));
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const SortedSequence&, const SortedSequence&) = default;

 private:
  std::vector<std::int64_t> values_;
};

namespace detail {
inline void check_same_length(const SortedSequence& x, const SortedSequence& y) {
  if (x.size() != y.size()) {
    throw RangeError("sequence lengths differ: " + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()));
  }
}
}  // namespace detail

/// x majorizes y: every prefix sum of x is >= that of y, totals equal.
inline bool majorizes(const SortedSequence& x, const SortedSequence& y) {
  detail::check_same_length(x, y);
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x.values()[i];
    sy += y.values()[i];
    if (sx < sy) return false;
  }
  return sx == sy;
}

enum class KaramataVerdict { kHoldsStrict, kHoldsEqual, kNotApplicable };

inline std::int64_t sum_of_squares(const SortedSequence& x) {
  std::int64_t s = 0;
  for (std::int64_t v : x.values()) s += v * v;
  return s;
}

/// Karamata for f(t) = t^2. Throws std::logic_error if a majorizing pair
/// fails the strict inequality, which would contradict strict convexity.
inline KaramataVerdict karamata_square_check(const SortedSequence& x, const SortedSequence& y) {
  if (!majorizes(x, y)) return KaramataVerdict::kNotApplicable;
  if (x == y) return KaramataVerdict::kHoldsEqual;
  if (sum_of_squares(x) <= sum_of_squares(y)) {
    throw std::logic_error("majorizing sequence without larger sum of squares");
  }
  return KaramataVerdict::kHoldsStrict;
}

struct FnkOrderingEntry {
  int s = 0;  // residual block sits at position s+1
  std::int64_t le = 0;
};

struct FnkOrdering {
  int n = 0;
  int k = 0;
  bool single_member = false;  // r = 0: nothing to order
  std::vector<FnkOrderingEntry> entries;
  bool strictly_increasing = true;
  /// Sd_t of a member with the residual block later dominates every
  /// member with it earlier, for all t.
  bool prefix_dominance = true;

  bool ok() const noexcept { return strictly_increasing && prefix_dominance; }
};

/// Laplacian energy of each F_{n,k}^{s+1}, s = 0..q, and the checks that
/// moving the residual block later raises the energy and majorizes the
/// outdegree sequence.
inline FnkOrdering verify_fnk_ordering(int n, int k) {
  FnkOrdering out;
  out.n = n;
  out.k = k;
  const std::vector<Digraph> members = enumerate_fnk_members(n, k);
  if (n % k == 0) {
    out.single_member = true;
    out.entries.push_back({0, laplacian_energy(members.front())});
    return out;
  }
  std::vector<DegreeSequence> seqs;
  for (std::size_t s = 0; s < members.size(); ++s) {
    out.entries.push_back({static_cast<int>(s), laplacian_energy(members[s])});
    seqs.push_back(out_degree_sequence(members[s]));
  }
  for (std::size_t s = 1; s < out.entries.size(); ++s) {
    if (out.entries[s].le <= out.entries[s - 1].le) out.strictly_increasing = false;
  }
  for (std::size_t later = 0; later < seqs.size(); ++later) {
    for (std::size_t earlier = 0; earlier < later; ++earlier) {
      for (int t = 1; t <= n; ++t) {
        if (seqs[earlier].top_sum(t) > seqs[later].top_sum(t)) out.prefix_dominance = false;
      }
    }
  }
  return out;
}

}  // namespace dle
