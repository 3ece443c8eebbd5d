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
#include <numeric>
#include <queue>
#include <utility>

namespace fusscat {
namespace {

struct Canon {
  CanonicalCode code;
  BigInt aut_order;
};

std::vector<int> BfsDistances(const std::vector<std::vector<int>>& adj,
                              int source, std::vector<int>* parent) {
  std::vector<int> dist(adj.size(), -1);
  parent->assign(adj.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      (*parent)[w] = u;
      q.push(w);
    }
  }
  return dist;
}

// The node fixed by every automorphism: the center of the tree, or the black
// end of the central edge when the diameter is odd (its ends differ in color).
int CanonicalRoot(const std::vector<std::vector<int>>& adj, int num_black) {
  std::vector<int> parent;
  auto dist = BfsDistances(adj, 0, &parent);
  int a = static_cast<int>(std::max_element(dist.begin(), dist.end()) -
                           dist.begin());
  dist = BfsDistances(adj, a, &parent);
  int b = static_cast<int>(std::max_element(dist.begin(), dist.end()) -
                           dist.begin());
  std::vector<int> path{b};
  while (path.back() != a) path.push_back(parent[path.back()]);
  const int len = static_cast<int>(path.size()) - 1;
  if (len % 2 == 0) return path[len / 2];
  int c1 = path[len / 2];
  int c2 = path[len / 2 + 1];
  return c1 < num_black ? c1 : c2;
}

std::string EncodeSubtree(const std::vector<std::vector<int>>& adj,
                          int num_black, int node, int parent,
                          BigInt* aut_order) {
  std::vector<std::string> children;
  for (int w : adj[node]) {
    if (w == parent) continue;
    children.push_back(EncodeSubtree(adj, num_black, w, node, aut_order));
  }
  std::sort(children.begin(), children.end());
  for (size_t i = 0; i < children.size();) {
    size_t j = i;
    while (j < children.size() && children[j] == children[i]) ++j;
    *aut_order *= Factorial(j - i);
    i = j;
  }
  std::string out(1, node < num_black ? 'b' : 'w');
  out += '(';
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

Canon Canonize(const std::vector<std::vector<int>>& adj, int num_black) {
  Canon c;
  c.aut_order = 1;
  int root = CanonicalRoot(adj, num_black);
  c.code.text = EncodeSubtree(adj, num_black, root, -1, &c.aut_order);
  return c;
}

}  // namespace

Hypertree Hypertree::FromHyperedges(unsigned r, int num_vertices,
                                    std::vector<std::vector<int>> hyperedges) {
  if (r < 1) throw UsageError("hypertree: r must be positive");
  const int n = static_cast<int>(hyperedges.size());
  if (num_vertices != static_cast<int>(r) * n + 1) {
    throw UsageError("hypertree: vertex count must be r*n + 1");
  }
  Hypertree t;
  t.r_ = r;
  t.num_black_ = num_vertices;
  t.adjacency_.assign(static_cast<size_t>(num_vertices + n), {});
  for (int e = 0; e < n; ++e) {
    auto& edge = hyperedges[e];
    if (edge.size() != r + 1) {
      throw UsageError("hypertree: every hyperedge needs exactly r+1 vertices");
    }
    std::vector<int> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw UsageError("hypertree: repeated vertex inside a hyperedge");
    }
    for (int v : edge) {
      if (v < 0 || v >= num_vertices) {
        throw UsageError("hypertree: vertex index out of range");
      }
      t.adjacency_[v].push_back(num_vertices + e);
      t.adjacency_[num_vertices + e].push_back(v);
    }
  }
  std::vector<int> parent;
  auto dist = BfsDistances(t.adjacency_, 0, &parent);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw UsageError("hypertree: incidence graph is not connected");
  }
  t.hyperedges_ = std::move(hyperedges);
  Canon c = Canonize(t.adjacency_, t.num_black_);
  t.code_ = std::move(c.code);
  t.aut_order_ = std::move(c.aut_order);
  return t;
}

CanonicalCode canonical_code(const Hypertree& t) { return t.code(); }

BigInt automorphism_order(const Hypertree& t) { return t.aut_order(); }

std::vector<Hypertree> enumerate_hypertrees(unsigned r, int n) {
  if (r < 1) throw UsageError("enumerate_hypertrees: r must be positive");
  if (n < 0) throw UsageError("enumerate_hypertrees: n must be nonnegative");
  std::vector<Hypertree> level{Hypertree::FromHyperedges(r, 1, {})};
  // Every hypertree with k+1 hyperedges arises from one with k by hanging a
  // new hyperedge off a single vertex.
  for (int k = 0; k < n; ++k) {
    std::map<CanonicalCode, Hypertree> next;
    for (const Hypertree& t : level) {
      const int base = t.num_black();
      for (int v = 0; v < base; ++v) {
        auto edges = t.hyperedges();
        std::vector<int> fresh{v};
        for (unsigned i = 0; i < r; ++i) fresh.push_back(base + static_cast<int>(i));
        edges.push_back(std::move(fresh));
        Hypertree grown =
            Hypertree::FromHyperedges(r, base + static_cast<int>(r), std::move(edges));
        next.try_emplace(grown.code(), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return level;
}

}  // namespace fusscat
