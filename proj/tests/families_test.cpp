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

#include <vector>

#include "dle/errors.hpp"
#include "dle/families.hpp"
#include "dle/invariants.hpp"

namespace dle {
namespace {

// Arc-by-arc construction from the block definitions: u -> v iff u's block
// precedes v's, or both share a block and are adjacent inside it.
Digraph reference_chain(const std::vector<int>& sizes, bool bipartite) {
  std::vector<int> block;
  std::vector<int> side;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (int i = 0; i < sizes[b]; ++i) {
      block.push_back(static_cast<int>(b));
      side.push_back(i < (sizes[b] + 1) / 2 ? 0 : 1);
    }
  }
  const int n = static_cast<int>(block.size());
  DigraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const auto bu = block[static_cast<std::size_t>(u)];
      const auto bv = block[static_cast<std::size_t>(v)];
      const bool inside = bipartite ? side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)] : true;
      if (bu < bv || (bu == bv && inside)) b.add_arc(u, v);
    }
  }
  return b.build();
}

TEST(Families, FnkResidualInMiddle) {
  const Digraph g = gen_fnk(4, 3, 2);
  EXPECT_EQ(g.arc_count(), 9);
  EXPECT_EQ(g, reference_chain({3, 1}, false));
}

TEST(Families, FnkResidualFirst) {
  const Digraph g = gen_fnk(4, 3, 1);
  EXPECT_EQ(g, reference_chain({1, 3}, false));
  EXPECT_EQ(g.arc_count(), 9);
}

TEST(Families, FnkMatchesReferenceEverywhere) {
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 20; ++n) {
      const int q = n / k;
      const int r = n % k;
      if (r == 0) {
        EXPECT_EQ(gen_fnk(n, k, std::nullopt), reference_chain(std::vector<int>(static_cast<std::size_t>(q), k), false));
        continue;
      }
      for (int pos = 1; pos <= q + 1; ++pos) {
        std::vector<int> sizes(static_cast<std::size_t>(q), k);
        sizes.insert(sizes.begin() + (pos - 1), r);
        EXPECT_EQ(gen_fnk(n, k, pos), reference_chain(sizes, false)) << n << " " << k << " " << pos;
      }
    }
  }
}

TEST(Families, FnkParameterErrors) {
  EXPECT_THROW(gen_fnk(6, 3, 1), SpecError);             // r = 0, no residual to place
  EXPECT_THROW(gen_fnk(5, 3, std::nullopt), SpecError);  // r > 0 needs a position
  EXPECT_THROW(gen_fnk(5, 3, 3), SpecError);             // q + 1 = 2
  EXPECT_THROW(gen_fnk(5, 3, 0), SpecError);
  EXPECT_THROW(gen_fnk(5, 0, 1), SpecError);
  EXPECT_THROW(gen_fnk(65, 3, 1), CapacityError);
}

TEST(Families, FnkMembers) {
  const auto members = enumerate_fnk_members(5, 3);
  ASSERT_EQ(members.size(), 2U);
  EXPECT_EQ(members[0], gen_fnk(5, 3, 1));
  EXPECT_EQ(members[1], gen_fnk(5, 3, 2));
  EXPECT_EQ(enumerate_fnk_members(6, 3).size(), 1U);
  EXPECT_EQ(gen_fnk_residual_last(6, 3), gen_fnk(6, 3, std::nullopt));
  EXPECT_EQ(gen_fnk_residual_last(5, 3), gen_fnk(5, 3, 2));
}

TEST(Families, OrderBelowBlockSizeIsCompleteDigraph) {
  EXPECT_EQ(gen_fnk(2, 3, 1), gen_complete_digraph(2));
  EXPECT_EQ(enumerate_fnk_members(2, 3).size(), 1U);
}

TEST(Families, BkFourOne) {
  const Digraph g = gen_bk({4, 1});
  EXPECT_EQ(g.arc_count(), 12);
  EXPECT_EQ(g, reference_chain({4, 1}, true));
  EXPECT_TRUE(g.has_arc(0, 2));
  EXPECT_TRUE(g.has_arc(2, 0));
  EXPECT_FALSE(g.has_arc(0, 1));
}

TEST(Families, BkOddBlockPutsLargerSideFirst) {
  const Digraph g = gen_bk({3});
  EXPECT_EQ(g, build_digraph(3, {{0, 2}, {1, 2}, {2, 0}, {2, 1}}));
}

TEST(Families, BkMatchesReference) {
  const std::vector<std::vector<int>> cases{{2}, {4, 2}, {2, 4, 3}, {6, 1}, {2, 2, 2, 5}, {1}};
  for (const auto& parts : cases) EXPECT_EQ(gen_bk(parts), reference_chain(parts, true));
}

TEST(Families, BkParameterErrors) {
  EXPECT_THROW(gen_bk({}), SpecError);
  EXPECT_THROW(gen_bk({3, 1}), SpecError);
  EXPECT_THROW(gen_bk({2, 0}), SpecError);
}

TEST(Families, Bk01CompositionsOrderFive) {
  EXPECT_EQ(bk01_compositions(5), (std::vector<std::vector<int>>{{4, 1}, {2, 3}, {2, 2, 1}}));
}

TEST(Families, Bk01CompositionsSmall) {
  EXPECT_EQ(bk01_compositions(1), (std::vector<std::vector<int>>{{1}}));
  EXPECT_EQ(bk01_compositions(2), (std::vector<std::vector<int>>{{2}}));
  EXPECT_EQ(bk01_compositions(3), (std::vector<std::vector<int>>{{3}, {2, 1}}));
  EXPECT_EQ(bk01_compositions(4), (std::vector<std::vector<int>>{{4}, {2, 2}}));
  EXPECT_THROW(bk01_compositions(0), RangeError);
}

TEST(Families, Bk01MembersShareEnergy) {
  for (int n = 2; n <= 20; ++n) {
    const auto members = enumerate_bk01_members(n);
    ASSERT_FALSE(members.empty());
    for (const auto& g : members) {
      EXPECT_EQ(g.size(), n);
      EXPECT_EQ(laplacian_energy(g), laplacian_energy(members.front())) << n;
    }
  }
}

TEST(Families, TransitiveTournamentAndCompleteDigraph) {
  EXPECT_EQ(gen_transitive_tournament(4).arc_count(), 6);
  EXPECT_TRUE(gen_transitive_tournament(4).has_arc(0, 3));
  EXPECT_FALSE(gen_transitive_tournament(4).has_arc(3, 0));
  EXPECT_EQ(gen_complete_digraph(5).arc_count(), 20);
  EXPECT_EQ(gen_fnk(6, 1, std::nullopt), gen_transitive_tournament(6));
}

TEST(Families, ParseFnk) {
  const FamilySpec s = parse_family_spec("fnk:n=5,k=2,s=3");
  EXPECT_EQ(s.kind, FamilyKind::kFnk);
  EXPECT_EQ(s.n, 5);
  EXPECT_EQ(s.k, 2);
  EXPECT_EQ(s.r_position, 3);
  EXPECT_EQ(realize(s), gen_fnk(5, 2, 3));
  EXPECT_EQ(to_string(s), "fnk:n=5,k=2,s=3");
  EXPECT_EQ(block_assignment(s), (std::vector<int>{0, 0, 1, 1, 2}));
}

TEST(Families, ParseFnkWithoutResidual) {
  EXPECT_FALSE(parse_family_spec("fnk:n=9,k=3,s=0").r_position.has_value());
  EXPECT_FALSE(parse_family_spec("fnk:n=9,k=3").r_position.has_value());
  EXPECT_EQ(realize(parse_family_spec("fnk:n=9,k=3")), gen_fnk(9, 3, std::nullopt));
  EXPECT_THROW(realize(parse_family_spec("fnk:n=9,k=3,s=3")), SpecError);
}

TEST(Families, ParseOtherKinds) {
  const FamilySpec bk = parse_family_spec("bk:parts=4+2+1");
  EXPECT_EQ(bk.n, 7);
  EXPECT_EQ(realize(bk), gen_bk({4, 2, 1}));
  EXPECT_EQ(to_string(bk), "bk:parts=4+2+1");
  EXPECT_EQ(block_assignment(bk), (std::vector<int>{0, 0, 0, 0, 1, 1, 2}));
  EXPECT_EQ(realize(parse_family_spec("tt:n=4")), gen_transitive_tournament(4));
  EXPECT_EQ(realize(parse_family_spec("kd:n=3")), gen_complete_digraph(3));
}

TEST(Families, ParseErrors) {
  for (const char* bad : {"fnk", "xyz:n=3", "fnk:n=3", "fnk:k=3", "fnk:n=x,k=2", "bk:n=3", "tt:n=3,k=2",
                          "bk:parts=4+", "kd:", "tt:n"}) {
    EXPECT_THROW(parse_family_spec(bad), ParseError) << bad;
  }
}

}  // namespace
}  // namespace dle
