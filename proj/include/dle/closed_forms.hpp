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

// Closed-form extremal values. Each formula is evaluated as an integer
// numerator over a small fixed denominator and the division is checked to be
// exact; a remainder means the formula (or its transcription) is wrong.
//
// Throughout, n = qk + r with 0 <= r < k.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dle/errors.hpp"

namespace dle {

struct ExactValue {
  std::int64_t value = 0;
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;
  std::string source;

  friend bool operator==(const ExactValue&, const ExactValue&) = default;
};

/// Largest order accepted; keeps every cubic numerator inside int64.
inline constexpr std::int64_t kMaxFormulaOrder = 100'000;

namespace detail {

inline ExactValue exact(std::int64_t num, std::int64_t den, std::string source) {
  if (den <= 0 || num % den != 0) {
    throw std::logic_error(source + ": " + std::to_string(num) + " not divisible by " +
                           std::to_string(den));
  }
  return ExactValue{num / den, num, den, std::move(source)};
}

inline void check_order(std::int64_t n, std::int64_t k) {
  if (n < 1 || n > kMaxFormulaOrder) {
    throw RangeError("order n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxFormulaOrder));
  }
  if (k < 1 || k > kMaxFormulaOrder) {
    throw RangeError("block size k=" + std::to_string(k) + " outside 1.." + std::to_string(kMaxFormulaOrder));
  }
}

}  // namespace detail

/// Turán number of the undirected clique K_{k+1}:
/// ((k-1) n^2 - r(k-r)) / (2k).
inline ExactValue ex_arcs_clique(std::int64_t n, std::int64_t k) {
  detail::check_order(n, k);
  const std::int64_t r = n % k;
  return detail::exact((k - 1) * n * n - r * (k - r), 2 * k, "arcs_clique");
}

/// Most arcs without a complete digraph on k+1 vertices: C(n,2) + ex(n, K_{k+1}).
inline ExactValue ex_arcs_complete_digraph(std::int64_t n, std::int64_t k) {
  const ExactValue clique = ex_arcs_clique(n, k);
  // Over the clique's denominator 2k: C(n,2) = k n (n-1) / 2k.
  return detail::exact(k * n * (n - 1) + clique.numerator, clique.denominator, "arcs_complete_digraph");
}

/// Most arcs without a tournament on k+1 vertices: 2 ex(n, K_{k+1}).
inline ExactValue ex_arcs_tournament(std::int64_t n, std::int64_t k) {
  const ExactValue clique = ex_arcs_clique(n, k);
  return detail::exact(2 * clique.numerator, clique.denominator, "arcs_tournament");
}

/// Complete digraph on n vertices: arcs and Laplacian energy. Used when the
/// forbidden cycle is longer than n (q = 0).
inline ExactValue complete_digraph_arcs(std::int64_t n) {
  return detail::exact(n * (n - 1), 1, "complete_digraph");
}
inline ExactValue complete_digraph_le(std::int64_t n) {
  // n vertices of outdegree n-1 plus n(n-1) closed 2-walks.
  return detail::exact(n * (n - 1) * (n - 1) + n * (n - 1), 1, "complete_digraph");
}

/// Most arcs in a digraph with no directed cycle of length k+1:
/// (n^2 + (k-2) n - r(k-r)) / 2. For k = 1, 2 the value is taken from the
/// complete-digraph / tournament forms (C_2 is the digon, C_3 the cyclic
/// triangle); the three agree there.
inline ExactValue ex_arcs_ck(std::int64_t n, std::int64_t k) {
  detail::check_order(n, k);
  if (k == 1) return ex_arcs_complete_digraph(n, 1);
  if (k == 2) return ex_arcs_tournament(n, 2);
  if (n < k) return complete_digraph_arcs(n);
  const std::int64_t r = n % k;
  return detail::exact(n * n + (k - 2) * n - r * (k - r), 2, "arcs_ck");
}

/// The general cubic for the maximum Laplacian energy without C_{k+1},
/// times 6:  2n^3 + (3k-6) n^2 + k^2 n + 4r^3 - 3k r^2 - k^2 r.
/// No dispatch on k; ex_le_ck() is the entry point for callers.
inline ExactValue le_ck_cubic(std::int64_t n, std::int64_t k) {
  detail::check_order(n, k);
  const std::int64_t r = n % k;
  const std::int64_t num = 2 * n * n * n + (3 * k - 6) * n * n + k * k * n + 4 * r * r * r -
                           3 * k * r * r - k * k * r;
  return detail::exact(num, 6, "le_ck_cubic");
}

/// Maximum Laplacian energy with no digon: n(n-1)(2n-1)/6.
inline ExactValue le_c2_free(std::int64_t n) {
  detail::check_order(n, 1);
  return detail::exact(n * (n - 1) * (2 * n - 1), 6, "le_c2_free");
}

/// Maximum Laplacian energy with no directed triangle, n = 2q + r:
/// 2q (3n^2 - 6qn + 4q^2 + 2) / 3.
inline ExactValue le_c3_free(std::int64_t n) {
  detail::check_order(n, 2);
  const std::int64_t q = n / 2;
  return detail::exact(2 * q * (3 * n * n - 6 * q * n + 4 * q * q + 2), 3, "le_c3_free");
}

/// Maximum first Zagreb index with no directed triangle, n = 2q + r:
/// 2q (3n^2 - 6qn + 4q^2 - 1) / 3.
inline ExactValue ex_m1_c3(std::int64_t n) {
  detail::check_order(n, 2);
  const std::int64_t q = n / 2;
  return detail::exact(2 * q * (3 * n * n - 6 * q * n + 4 * q * q - 1), 3, "m1_c3_free");
}

/// Maximum Laplacian energy of a digraph with no directed cycle of length
/// k+1. Dispatches k = 1 and k = 2 to their dedicated forms and falls back
/// to the complete digraph when k > n.
inline ExactValue ex_le_ck(std::int64_t n, std::int64_t k) {
  detail::check_order(n, k);
  if (k == 1) return le_c2_free(n);
  if (k == 2) return le_c3_free(n);
  if (n < k) return complete_digraph_le(n);
  return le_ck_cubic(n, k);
}

}  // namespace dle
