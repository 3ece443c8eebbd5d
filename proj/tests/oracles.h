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

// Deliberately naive reference implementations used only by tests. Nothing
// here shares code with the library beyond the Hypertree container.

#ifndef FUSSCAT_TESTS_ORACLES_H_
#define FUSSCAT_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "fusscat/exact.h"
#include "fusscat/hypertree.h"

namespace fusscat::oracle {

// (1/(rn+1)) C((r+1)n, n) as a running product.
inline BigInt FussByProduct(unsigned r, int n) {
  Rational q = 1;
  for (int i = 1; i <= n; ++i) {
    Rational step(static_cast<long>(r + 1) * n - i + 1, i);
    step.canonicalize();
    q *= step;
  }
  q /= static_cast<long>(r) * n + 1;
  return q.get_num();
}

// Words with the given content by filtering all arrangements.
struct WordCounts {
  BigInt linear = 0;
  BigInt circular = 0;
};

inline WordCounts SmirnovByPermutation(const std::vector<unsigned>& content) {
  std::vector<unsigned> word;
  for (unsigned letter = 0; letter < content.size(); ++letter) {
    word.insert(word.end(), content[letter], letter);
  }
  WordCounts out;
  do {
    bool ok = true;
    for (size_t i = 1; i < word.size(); ++i) ok = ok && word[i] != word[i - 1];
    if (!ok) continue;
    out.linear += 1;
    if (word.size() >= 2 && word.front() != word.back()) out.circular += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Counts hypergraph automorphisms by trying every permutation of the vertices.
inline long AutomorphismsByPermutation(const Hypertree& t) {
  std::set<std::vector<int>> edges;
  for (auto e : t.hyperedges()) {
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  std::vector<int> perm(t.num_black());
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (const auto& e : edges) {
      std::vector<int> image;
      for (int v : e) image.push_back(perm[v]);
      std::sort(image.begin(), image.end());
      if (!edges.count(image)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Plain depth-first search over directed-edge budgets, no memo, no pruning.
inline long WalksByDfs(const Hypertree& t, int v, unsigned m) {
  const int nodes = t.num_nodes();
  std::vector<int> parent(nodes, -1);
  std::vector<int> order = {v};
  parent[v] = v;
  for (size_t i = 0; i < order.size(); ++i) {
    for (int w : t.adjacency()[order[i]]) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  // away[c] / back[c]: remaining crossings of the edge (parent[c], c).
  std::vector<int> away(nodes, static_cast<int>(m)), back(nodes, static_cast<int>(m));
  long left = 2L * m * (nodes - 1);
  long count = 0;
  std::function<void(int, int)> go = [&](int cur, int prev) {
    if (left == 0) {
      if (cur == v) ++count;
      return;
    }
    for (int next : t.adjacency()[cur]) {
      if (!t.is_black(cur) && next == prev && t.is_black(prev)) continue;
      int& slot = parent[next] == cur ? away[next] : back[cur];
      if (slot == 0) continue;
      --slot;
      --left;
      go(next, cur);
      ++slot;
      ++left;
    }
  };
  go(v, -1);
  return count;
}

// Every labeled (r+1)-uniform hypertree on r*n+1 vertices, as edge lists.
inline std::vector<std::vector<std::vector<int>>> LabeledHypertrees(unsigned r,
                                                                    int n) {
  const int vertices = static_cast<int>(r) * n + 1;
  std::vector<std::vector<int>> blocks;
  std::vector<int> pick(vertices, 0);
  std::fill(pick.begin(), pick.begin() + r + 1, 1);
  do {
    std::vector<int> b;
    for (int i = 0; i < vertices; ++i) {
      if (pick[i]) b.push_back(i);
    }
    blocks.push_back(b);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> chosen;
  std::function<void(size_t)> go = [&](size_t from) {
    if (static_cast<int>(chosen.size()) == n) {
      std::vector<std::vector<int>> edges;
      for (int i : chosen) edges.push_back(blocks[i]);
      // Connected with the right counts means acyclic.
      std::vector<int> comp(vertices);
      std::iota(comp.begin(), comp.end(), 0);
      std::function<int(int)> find = [&](int x) {
        return comp[x] == x ? x : comp[x] = find(comp[x]);
      };
      for (const auto& e : edges) {
        for (int x : e) comp[find(x)] = find(e[0]);
      }
      for (int x = 0; x < vertices; ++x) {
        if (find(x) != find(0)) return;
      }
      out.push_back(edges);
      return;
    }
    for (size_t i = from; i < blocks.size(); ++i) {
      chosen.push_back(static_cast<int>(i));
      go(i + 1);
      chosen.pop_back();
    }
  };
  go(0);
  return out;
}

// Number of ways to split {0..k-1} into blocks of size m, by recursion on the
// block containing the smallest element.
inline BigInt SetPartitionsIntoBlocks(unsigned m, unsigned k) {
  if (k == 0) return 1;
  if (k < m) return 0;
  return Binomial(k - 1, m - 1) * SetPartitionsIntoBlocks(m, k - m);
}

}  // namespace fusscat::oracle

#endif  // FUSSCAT_TESTS_ORACLES_H_
