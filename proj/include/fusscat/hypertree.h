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

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "fusscat/exact.h"

namespace fusscat {

// Center-rooted AHU encoding of a bicolored tree. Equal codes iff the trees
// are isomorphic by a color-preserving map.
struct CanonicalCode {
  std::string text;

  auto operator<=>(const CanonicalCode&) const = default;
};

// An unlabeled (r+1)-uniform hypertree, stored as its bipartite incidence
// tree. Nodes [0, num_black) are black (hypertree vertices); nodes
// [num_black, num_black + n) are white (hyperedges). Every white node has
// degree r+1 and the incidence graph is a tree.
class Hypertree {
 public:
  // Validates the hyperedge list: num_vertices == r*n + 1, each hyperedge has
  // r+1 distinct in-range vertices, and the incidence graph is connected.
  static Hypertree FromHyperedges(unsigned r, int num_vertices,
                                  std::vector<std::vector<int>> hyperedges);

  unsigned r() const { return r_; }
  int num_hyperedges() const { return static_cast<int>(hyperedges_.size()); }
  int num_black() const { return num_black_; }
  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  bool is_black(int node) const { return node < num_black_; }
  int white_node(int hyperedge) const { return num_black_ + hyperedge; }

  const std::vector<std::vector<int>>& hyperedges() const {
    return hyperedges_;
  }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

  // |Aut(T)|: color-preserving automorphisms of the incidence tree.
  const BigInt& aut_order() const { return aut_order_; }
  const CanonicalCode& code() const { return code_; }

 private:
  Hypertree() = default;

  unsigned r_ = 1;
  int num_black_ = 1;
  std::vector<std::vector<int>> hyperedges_;
  std::vector<std::vector<int>> adjacency_;
  BigInt aut_order_ = 1;
  CanonicalCode code_;
};

CanonicalCode canonical_code(const Hypertree& t);
BigInt automorphism_order(const Hypertree& t);

// One representative per isomorphism class of (r+1)-uniform hypertrees with
// n hyperedges, sorted by canonical code. n = 0 yields the lone vertex.
std::vector<Hypertree> enumerate_hypertrees(unsigned r, int n);

}  // namespace fusscat
