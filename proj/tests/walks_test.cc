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

#include "fusscat/walks.h"

#include <set>

#include <gtest/gtest.h>

#include "fusscat/fuss_objects.h"
#include "fusscat/smirnov.h"
#include "oracles.h"

namespace fusscat {
namespace {

Hypertree Star(unsigned r) {
  std::vector<int> e(r + 1);
  std::iota(e.begin(), e.end(), 0);
  return Hypertree::FromHyperedges(r, r + 1, {e});
}

TEST(WalksTest, SpecExamples) {
  for (int v = 0; v < 3; ++v) EXPECT_EQ(count_walks(Star(2), v, 2), 8);
  EXPECT_EQ(count_walks(Star(1), 0, 1), 1);
  EXPECT_EQ(fc_bruteforce(1, 2, 2), 6);
  EXPECT_EQ(fc_bruteforce(2, 2, 1), 4);
  EXPECT_EQ(fc_bruteforce(2, 1, 3), 12);
  EXPECT_EQ(fc_bruteforce(2, 2, 2), 144);
  EXPECT_EQ(fc_bruteforce(1, 1, 4), 14);
}

TEST(WalksTest, PathOnFiveVertices) {
  // With m=1 a walk is fixed by the order in which each vertex visits its
  // children, so a_T(v) is the product of (child count)! over T rooted at v.
  auto path = Hypertree::FromHyperedges(1, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  EXPECT_EQ(vertex_walk_counts(path, 1), (std::vector<BigInt>{1, 2, 2, 2, 1}));
  auto star = Hypertree::FromHyperedges(1, 5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(vertex_walk_counts(star, 1), (std::vector<BigInt>{24, 6, 6, 6, 6}));
  // Summing a_T(v)/|Aut T| over the three shapes gives the Catalan number 14.
  Rational total = 0;
  for (const auto& t : enumerate_hypertrees(1, 4)) {
    for (const auto& a : vertex_walk_counts(t, 1)) {
      total += MakeRational(a, t.aut_order());
    }
  }
  EXPECT_EQ(total, 14);
}

TEST(WalksTest, MatchesNaiveSearch) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned m = 1; m <= 2; ++m) {
      for (int n = 1; static_cast<int>(r + 1) * n * m <= 12; ++n) {
        for (const auto& t : enumerate_hypertrees(r, n)) {
          for (int v = 0; v < t.num_black(); ++v) {
            EXPECT_EQ(count_walks(t, v, m), oracle::WalksByDfs(t, v, m))
                << "r=" << r << " m=" << m << " n=" << n << " v=" << v;
          }
        }
      }
    }
  }
}

TEST(WalksTest, EnumerationAgreesWithCountAndVisitsEveryVertex) {
  for (unsigned r = 1; r <= 2; ++r) {
    for (unsigned m = 1; m <= 2; ++m) {
      for (int n = 1; n <= 3; ++n) {
        for (const auto& t : enumerate_hypertrees(r, n)) {
          for (int v = 0; v < t.num_black(); ++v) {
            auto walks = enumerate_walks(t, v, m);
            EXPECT_EQ(BigInt(walks.size()), count_walks(t, v, m));
            EXPECT_TRUE(std::is_sorted(walks.begin(), walks.end()));
            for (const auto& w : walks) {
              std::set<int> seen(w.begin(), w.end());
              EXPECT_EQ(static_cast<int>(seen.size()), t.num_nodes());
              EXPECT_EQ(w.front(), v);
              EXPECT_EQ(w.back(), v);
            }
          }
        }
      }
    }
  }
}

TEST(WalksTest, OrbitInvariance) {
  // Vertices exchanged by an automorphism (found by brute force) see the
  // same number of walks.
  for (unsigned r = 1; r <= 2; ++r) {
    for (int n = 1; n <= (r == 1 ? 5 : 3); ++n) {
      for (const auto& t : enumerate_hypertrees(r, n)) {
        const auto counts = vertex_walk_counts(t, 2);
        std::vector<int> perm(t.num_black());
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::vector<int>> edges;
        for (auto e : t.hyperedges()) {
          std::sort(e.begin(), e.end());
          edges.insert(e);
        }
        do {
          bool automorphism = true;
          for (const auto& e : edges) {
            std::vector<int> image;
            for (int x : e) image.push_back(perm[x]);
            std::sort(image.begin(), image.end());
            automorphism = automorphism && edges.count(image);
          }
          if (!automorphism) continue;
          for (int v = 0; v < t.num_black(); ++v) {
            EXPECT_EQ(counts[v], counts[perm[v]]);
          }
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }
  }
}

TEST(WalksTest, SingleHyperedgeMatchesCircularWords) {
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned m = 1; m <= 4; ++m) {
      BigInt total = 0;
      for (const auto& a : vertex_walk_counts(Star(r), m)) total += a;
      EXPECT_EQ(total, circular_smirnov_count(ContentVector(r + 1, m)))
          << "r=" << r << " m=" << m;
    }
  }
}

TEST(WalksTest, FussCatalanAtMultiplicityOne) {
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(fc_bruteforce(1, 1, n), oracle::FussByProduct(1, n));
  for (unsigned r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      EXPECT_EQ(fc_bruteforce(r, 1, n, 18), fuss_closed_form(r, n));
    }
  }
}

TEST(WalksTest, WordsOfTheStar) {
  auto star = Star(2);
  auto walks = enumerate_walks(star, 0, 2);
  ASSERT_EQ(walks.size(), 8u);
  for (const auto& w : walks) {
    std::vector<int> word = walk_to_word(star, w);
    ASSERT_EQ(word.size(), 6u);
    EXPECT_EQ(word.back(), 0);
    EXPECT_NE(word.front(), 0);
    for (size_t i = 1; i < word.size(); ++i) EXPECT_NE(word[i], word[i - 1]);
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 0, 1, 1, 2, 2}));
    EXPECT_EQ(word_to_walk(star, 0, word), w);
  }
  auto edge = Star(1);
  auto tour = enumerate_walks(edge, 0, 1);
  ASSERT_EQ(tour.size(), 1u);
  EXPECT_EQ(walk_to_word(edge, tour[0]), (std::vector<int>{1, 0}));
}

TEST(WalksTest, Errors) {
  auto path = Hypertree::FromHyperedges(1, 3, {{0, 1}, {1, 2}});
  auto walks = enumerate_walks(path, 0, 1);
  ASSERT_FALSE(walks.empty());
  EXPECT_THROW(walk_to_word(path, walks[0]), UsageError);
  EXPECT_THROW(count_walks(path, path.white_node(0), 1), UsageError);
  EXPECT_THROW(fc_bruteforce(2, 3, 3), BudgetExceeded);
  EXPECT_NO_THROW(fc_bruteforce(2, 3, 2, 18));
}

}  // namespace
}  // namespace fusscat
