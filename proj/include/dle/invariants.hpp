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

#include <cstdint>

#include "dle/digraph.hpp"

namespace dle {

// Exact integer invariants. Nothing here touches floating point.

/// Closed walks of length 2, i.e. trace(A^2) = 2 * digons.
inline std::int64_t c2(const Digraph& g) { return 2 * static_cast<std::int64_t>(digon_count(g)); }

/// First Zagreb index over outdegrees.
inline std::int64_t first_zagreb(const Digraph& g) {
  std::int64_t sum = 0;
  for (int u = 0; u < g.size(); ++u) {
    const std::int64_t d = g.out_degree(u);
    sum += d * d;
  }
  return sum;
}

/// Sum of squared Laplacian eigenvalues via the degree/digon formula.
inline std::int64_t laplacian_energy(const Digraph& g) { return first_zagreb(g) + c2(g); }

/// trace(L^2) by literal multiplication of the integer Laplacian. Kept
/// independent of laplacian_energy() so the two can check each other.
inline std::int64_t trace_L_squared(const Digraph& g) {
  const LaplacianMatrix L(g);
  std::int64_t tr = 0;
  for (int i = 0; i < L.size(); ++i) {
    for (int j = 0; j < L.size(); ++j) tr += L(i, j) * L(j, i);
  }
  return tr;
}

/// Sum of the t largest outdegrees.
inline std::int64_t sd_t(const DegreeSequence& seq, int t) { return seq.top_sum(t); }

struct InvariantBundle {
  std::int64_t le = 0;
  std::int64_t m1 = 0;
  std::int64_t c2 = 0;
  std::int64_t e = 0;
  DegreeSequence degseq{{}};
};

inline InvariantBundle measure(const Digraph& g) {
  InvariantBundle b;
  b.m1 = first_zagreb(g);
  b.c2 = c2(g);
  b.le = b.m1 + b.c2;
  b.e = g.arc_count();
  b.degseq = out_degree_sequence(g);
  return b;
}

}  // namespace dle
