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

#include <string>
#include <unordered_map>
#include <utility>

namespace fusscat {
namespace {

// The incidence tree rooted at the walk's start. Each non-root node owns the
// edge to its parent; down_left[c] is how many more times that edge may be
// crossed away from the root. The matching toward-root count never needs
// storing: it is fixed by down_left and by whether the walker is below c.
class RootedWalkSearch {
 public:
  RootedWalkSearch(const Hypertree& t, int start, unsigned m)
      : tree_(t), start_(start), m_(static_cast<int>(m)) {
    if (start < 0 || start >= t.num_black()) {
      throw UsageError("walk start must be a black node");
    }
    const int n = t.num_nodes();
    parent_.assign(n, -1);
    subtree_.assign(n, {});
    std::vector<int> order{start};
    parent_[start] = start;
    for (size_t i = 0; i < order.size(); ++i) {
      for (int w : t.adjacency()[order[i]]) {
        if (parent_[w] != -1) continue;
        parent_[w] = order[i];
        order.push_back(w);
      }
    }
    parent_[start] = -1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      int c = *it;
      subtree_[c].push_back(c);
      if (parent_[c] >= 0) {
        auto& up = subtree_[parent_[c]];
        up.insert(up.end(), subtree_[c].begin(), subtree_[c].end());
      }
    }
    down_left_.assign(n, static_cast<char>(m_));
    down_left_[start] = 0;
    remaining_ = m_ * (n - 1);
  }

  BigInt Count() { return CountFrom(start_, -1); }

  void Enumerate(std::vector<Walk>* out, size_t max_walks) {
    Walk path{start_};
    EnumerateFrom(start_, -1, &path, out, max_walks);
  }

 private:
  bool SubtreeExhausted(int c) const {
    for (int d : subtree_[c]) {
      if (d != c && down_left_[d] != 0) return false;
    }
    return true;
  }

  // Legal next nodes from `cur`, given the node we arrived from.
  template <typename Fn>
  void ForEachMove(int cur, int prev, Fn&& fn) {
    for (int w : tree_.adjacency()[cur]) {
      if (!tree_.is_black(cur) && w == prev) continue;
      if (parent_[w] == cur) {
        if (down_left_[w] == 0) continue;
        --down_left_[w];
        --remaining_;
        fn(w);
        ++down_left_[w];
        ++remaining_;
      } else {
        // Leaving cur's subtree for good must not strand unused budget.
        if (down_left_[cur] == 0 && !SubtreeExhausted(cur)) continue;
        fn(w);
      }
    }
  }

  BigInt CountFrom(int cur, int prev) {
    if (remaining_ == 0 && cur == start_) return 1;
    std::string key(down_left_.begin(), down_left_.end());
    key.push_back(static_cast<char>(cur & 0xff));
    key.push_back(static_cast<char>(cur >> 8));
    int guard = tree_.is_black(cur) ? -1 : prev;
    key.push_back(static_cast<char>(guard & 0xff));
    key.push_back(static_cast<char>(guard >> 8));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    ForEachMove(cur, prev, [&](int w) { total += CountFrom(w, cur); });
    memo_.emplace(std::move(key), total);
    return total;
  }

  void EnumerateFrom(int cur, int prev, Walk* path, std::vector<Walk>* out,
                     size_t max_walks) {
    if (remaining_ == 0 && cur == start_) {
      if (out->size() >= max_walks) {
        throw BudgetExceeded("enumerate_walks: too many walks");
      }
      out->push_back(*path);
      return;
    }
    ForEachMove(cur, prev, [&](int w) {
      path->push_back(w);
      EnumerateFrom(w, cur, path, out, max_walks);
      path->pop_back();
    });
  }

  const Hypertree& tree_;
  int start_;
  int m_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> subtree_;
  std::string down_left_;
  int remaining_ = 0;
  std::unordered_map<std::string, BigInt> memo_;
};

}  // namespace

BigInt count_walks(const Hypertree& t, int v, unsigned m) {
  if (m < 1) throw UsageError("count_walks: m must be positive");
  if (m > 127) throw UsageError("count_walks: m too large");
  return RootedWalkSearch(t, v, m).Count();
}

std::vector<BigInt> vertex_walk_counts(const Hypertree& t, unsigned m) {
  std::vector<BigInt> out;
  for (int v = 0; v < t.num_black(); ++v) out.push_back(count_walks(t, v, m));
  return out;
}

std::vector<Walk> enumerate_walks(const Hypertree& t, int v, unsigned m,
                                  size_t max_walks) {
  if (m < 1 || m > 127) throw UsageError("enumerate_walks: bad m");
  std::vector<Walk> out;
  RootedWalkSearch(t, v, m).Enumerate(&out, max_walks);
  return out;
}

BigInt fc_bruteforce(unsigned r, unsigned m, int n, int budget) {
  if (r < 1 || m < 1 || n < 0) {
    throw UsageError("fc_bruteforce: need r >= 1, m >= 1, n >= 0");
  }
  const long units = static_cast<long>(r + 1) * n * m;
  if (units > budget) {
    throw BudgetExceeded("fc_bruteforce: (r+1)*n*m = " + std::to_string(units) +
                         " exceeds budget " + std::to_string(budget));
  }
  Rational total = 0;
  for (const Hypertree& t : enumerate_hypertrees(r, n)) {
    BigInt walks = 0;
    for (const BigInt& a : vertex_walk_counts(t, m)) walks += a;
    total += MakeRational(walks, t.aut_order());
  }
  return RequireInteger(total, "fc_bruteforce(r=" + std::to_string(r) +
                                   ", m=" + std::to_string(m) +
                                   ", n=" + std::to_string(n) + ")");
}

std::vector<int> walk_to_word(const Hypertree& t, const Walk& walk) {
  if (t.num_hyperedges() != 1) {
    throw UsageError("walk_to_word: tree must be a single hyperedge");
  }
  if (walk.size() < 3 || walk.size() % 2 == 0 || walk.front() != walk.back()) {
    throw UsageError("walk_to_word: not a closed walk");
  }
  const int hub = t.white_node(0);
  std::vector<int> word;
  for (size_t i = 0; i < walk.size(); ++i) {
    if (i % 2 == 1) {
      if (walk[i] != hub) throw UsageError("walk_to_word: malformed walk");
      continue;
    }
    if (!t.is_black(walk[i])) throw UsageError("walk_to_word: malformed walk");
    if (i > 0) word.push_back(walk[i]);
  }
  return word;
}

Walk word_to_walk(const Hypertree& t, int start, const std::vector<int>& word) {
  if (t.num_hyperedges() != 1) {
    throw UsageError("word_to_walk: tree must be a single hyperedge");
  }
  if (start < 0 || start >= t.num_black()) {
    throw UsageError("word_to_walk: start must be a black node");
  }
  Walk walk{start};
  for (int letter : word) {
    if (letter < 0 || letter >= t.num_black()) {
      throw UsageError("word_to_walk: letter out of range");
    }
    walk.push_back(t.white_node(0));
    walk.push_back(letter);
  }
  return walk;
}

}  // namespace fusscat
