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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dle/cycles.hpp"
#include "dle/families.hpp"
#include "support/oracles.hpp"

namespace dle {
namespace {

void expect_valid_witness(const Digraph& g, const CycleWitness& w, int len) {
  ASSERT_EQ(w.length(), len);
  EXPECT_EQ(std::set<int>(w.vertices.begin(), w.vertices.end()).size(), static_cast<std::size_t>(len));
  for (const auto& [u, v] : w.arcs()) EXPECT_TRUE(g.has_arc(u, v)) << u << "->" << v;
}

TEST(Cycles, AgreesWithNaiveSearchOnAllSmallDigraphs) {
  for (int n = 2; n <= 4; ++n) {
    testing::naive_for_each_digraph(n, [&](const Digraph& g) {
      for (int len = 2; len <= n; ++len) {
        const bool naive = testing::naive_has_cycle(g, len);
        ASSERT_EQ(!is_ck_free(g, len), naive) << "n=" << n << " len=" << len;
        const auto w = find_cycle_of_length(g, len);
        ASSERT_EQ(w.has_value(), naive);
        if (w) expect_valid_witness(g, *w, len);
      }
    });
  }
}

TEST(Cycles, AgreesWithNaiveSearchOnRandomDigraphs) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> p(0.1, 0.6);
  for (int t = 0; t < 1500; ++t) {
    const int n = 2 + t % 8;
    const Digraph g = testing::random_digraph(rng, n, p(rng));
    for (int len = 2; len <= n; ++len) {
      ASSERT_EQ(!is_ck_free(g, len), testing::naive_has_cycle(g, len)) << "n=" << n << " len=" << len;
    }
  }
}

TEST(Cycles, ExactLengthOnly) {
  // A directed 4-cycle has no cycle of length 2 or 3.
  const Digraph c4 = build_digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_TRUE(is_ck_free(c4, 2));
  EXPECT_TRUE(is_ck_free(c4, 3));
  EXPECT_FALSE(is_ck_free(c4, 4));
}

TEST(Cycles, CompleteDigraphHasEveryLength) {
  const Digraph g = gen_complete_digraph(6);
  for (int len = 2; len <= 6; ++len) {
    const auto w = find_cycle_of_length(g, len);
    ASSERT_TRUE(w.has_value());
    expect_valid_witness(g, *w, len);
  }
}

TEST(Cycles, TransitiveTournamentIsAcyclic) {
  const Digraph g = gen_transitive_tournament(10);
  for (int len = 2; len <= 10; ++len) EXPECT_TRUE(is_ck_free(g, len));
}

TEST(Cycles, LongCycleOnLargeOrder) {
  DigraphBuilder b(64);
  for (int v = 0; v < 64; ++v) b.add_arc(v, (v + 1) % 64);
  const Digraph g = b.build();
  EXPECT_FALSE(is_ck_free(g, 64));
  EXPECT_TRUE(is_ck_free(g, 63));
}

TEST(Cycles, LengthOutOfRange) {
  const Digraph g = gen_complete_digraph(3);
  EXPECT_THROW(is_ck_free(g, 1), RangeError);
  EXPECT_THROW(is_ck_free(g, 4), RangeError);
  EXPECT_THROW(find_cycle_of_length(g, 0), RangeError);
}

}  // namespace
}  // namespace dle
