// Copyright 2026 The fusscat Authors.
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

#include "fusscat/hypertree.h"

#include <algorithm>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"

namespace fusscat {
namespace {

Hypertree Relabel(const Hypertree& t, const std::vector<int>& perm) {
  std::vector<std::vector<int>> edges;
  for (const auto& e : t.hyperedges()) {
    std::vector<int> image;
    for (int v : e) image.push_back(perm[v]);
    edges.push_back(image);
  }
  std::reverse(edges.begin(), edges.end());
  return Hypertree::FromHyperedges(t.r(), t.num_black(), edges);
}

TEST(HypertreeTest, SmallExamples) {
  auto stars = enumerate_hypertrees(2, 1);
  ASSERT_EQ(stars.size(), 1u);
  EXPECT_EQ(stars[0].aut_order(), 6);
  auto paths = enumerate_hypertrees(1, 2);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].aut_order(), 2);
  auto empty = enumerate_hypertrees(3, 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].num_black(), 1);
  EXPECT_EQ(empty[0].aut_order(), 1);
}

TEST(HypertreeTest, StarAutomorphisms) {
  for (unsigned r = 1; r <= 5; ++r) {
    std::vector<int> e(r + 1);
    std::iota(e.begin(), e.end(), 0);
    EXPECT_EQ(Hypertree::FromHyperedges(r, r + 1, {e}).aut_order(),
              Factorial(r + 1));
  }
  auto star5 = Hypertree::FromHyperedges(1, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(star5.aut_order(), 24);
}

TEST(HypertreeTest, PathAndStarCodesDiffer) {
  auto path = Hypertree::FromHyperedges(1, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  auto star = Hypertree::FromHyperedges(1, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_NE(path.code(), star.code());
  EXPECT_EQ(canonical_code(path), path.code());
  EXPECT_EQ(automorphism_order(path), 2);
}

TEST(HypertreeTest, UnlabeledTreeCounts) {
  const std::vector<size_t> expected = {1, 1, 1, 2, 3, 6, 11};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(enumerate_hypertrees(1, n).size(), expected[n]) << "n=" << n;
  }
}

TEST(HypertreeTest, UnlabeledCountsMatchLabeledDedup) {
  for (unsigned r = 1; r <= 2; ++r) {
    for (int n = 0; n <= (r == 1 ? 5 : 3); ++n) {
      std::set<CanonicalCode> codes;
      for (const auto& edges : oracle::LabeledHypertrees(r, n)) {
        codes.insert(Hypertree::FromHyperedges(r, r * n + 1, edges).code());
      }
      std::set<CanonicalCode> enumerated;
      for (const auto& t : enumerate_hypertrees(r, n)) enumerated.insert(t.code());
      EXPECT_EQ(codes, enumerated) << "r=" << r << " n=" << n;
    }
  }
}

// |labeled copies of T| * |Aut(T)| = (rn+1)! for each class.
TEST(HypertreeTest, OrbitStabilizerOverLabelings) {
  for (unsigned r = 1; r <= 2; ++r) {
    for (int n = 1; n <= 3; ++n) {
      std::map<CanonicalCode, long> copies;
      for (const auto& edges : oracle::LabeledHypertrees(r, n)) {
        ++copies[Hypertree::FromHyperedges(r, r * n + 1, edges).code()];
      }
      for (const auto& t : enumerate_hypertrees(r, n)) {
        EXPECT_EQ(t.aut_order() * copies[t.code()], Factorial(r * n + 1))
            << "r=" << r << " n=" << n;
      }
    }
  }
}

TEST(HypertreeTest, AutOrderMatchesPermutationOracle) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (int n = 0; n <= (r == 1 ? 6 : 2); ++n) {
      for (const auto& t : enumerate_hypertrees(r, n)) {
        EXPECT_EQ(t.aut_order(), oracle::AutomorphismsByPermutation(t))
            << "r=" << r << " n=" << n;
      }
    }
  }
}

TEST(HypertreeTest, CodeInvariantUnderRandomRelabeling) {
  std::mt19937 rng(11);
  for (unsigned r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& t : enumerate_hypertrees(r, n)) {
        std::vector<int> perm(t.num_black());
        std::iota(perm.begin(), perm.end(), 0);
        for (int trial = 0; trial < 5; ++trial) {
          std::shuffle(perm.begin(), perm.end(), rng);
          Hypertree u = Relabel(t, perm);
          EXPECT_EQ(u.code(), t.code());
          EXPECT_EQ(u.aut_order(), t.aut_order());
        }
      }
    }
  }
}

TEST(HypertreeTest, StructuralInvariants) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      auto trees = enumerate_hypertrees(r, n);
      EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end(),
                                 [](const Hypertree& a, const Hypertree& b) {
                                   return a.code() < b.code();
                                 }));
      for (const auto& t : trees) {
        EXPECT_EQ(t.num_black(), static_cast<int>(r) * n + 1);
        EXPECT_EQ(t.num_hyperedges(), n);
        for (int e = 0; e < n; ++e) {
          EXPECT_EQ(t.adjacency()[t.white_node(e)].size(), r + 1);
        }
        EXPECT_GE(t.aut_order(), 1);
      }
    }
  }
}

TEST(HypertreeTest, RejectsMalformedInput) {
  EXPECT_THROW(Hypertree::FromHyperedges(2, 4, {{0, 1, 2}}), UsageError);
  EXPECT_THROW(Hypertree::FromHyperedges(2, 3, {{0, 1}}), UsageError);
  EXPECT_THROW(Hypertree::FromHyperedges(2, 3, {{0, 1, 1}}), UsageError);
  EXPECT_THROW(Hypertree::FromHyperedges(1, 3, {{0, 1}, {0, 1}}), UsageError);
  EXPECT_THROW(Hypertree::FromHyperedges(1, 3, {{0, 1}, {0, 7}}), UsageError);
}

}  // namespace
}  // namespace fusscat
