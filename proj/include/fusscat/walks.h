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

#include <vector>

#include "fusscat/exact.h"
#include "fusscat/hypertree.h"

namespace fusscat {

// A closed walk on an incidence tree, as the sequence of visited nodes
// (first == last == the starting black node).
using Walk = std::vector<int>;

// Brute-force size cap, measured as (r+1) * n * m directed-edge budget units.
inline constexpr int kDefaultWalkBudget = 18;

// a_T^(r,m)(v): closed walks from black node v that cross every incidence
// edge m times away from v and m times back toward v (directions taken with
// the tree rooted at v) and never step black -> white -> same black.
BigInt count_walks(const Hypertree& t, int v, unsigned m);

// count_walks for every black node, indexed by node.
std::vector<BigInt> vertex_walk_counts(const Hypertree& t, unsigned m);

// The walks counted by count_walks, in lexicographic order. Meant for small
// trees only; throws BudgetExceeded past `max_walks`.
std::vector<Walk> enumerate_walks(const Hypertree& t, int v, unsigned m,
                                  size_t max_walks = 100000);

// Sum over hypertree classes T and black v of a_T(v) / |Aut(T)|.
// Refuses (BudgetExceeded) when (r+1)*n*m exceeds `budget`; throws
// ConsistencyError if the weighted sum is not an integer.
BigInt fc_bruteforce(unsigned r, unsigned m, int n,
                     int budget = kDefaultWalkBudget);

// Single-hyperedge trees only: the black nodes visited after the start,
// in order. The last letter is the start node.
std::vector<int> walk_to_word(const Hypertree& t, const Walk& walk);
Walk word_to_walk(const Hypertree& t, int start, const std::vector<int>& word);

}  // namespace fusscat
