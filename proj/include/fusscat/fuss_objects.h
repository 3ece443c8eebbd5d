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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fusscat/exact.h"
#include "fusscat/hypertree.h"

namespace fusscat {

// FC_n^(r) = C((r+1)n, n) / (rn + 1).
BigInt fuss_closed_form(unsigned r, int n);

// A recursive structure whose non-empty nodes have r+1 ordered slots, each
// holding a (possibly empty) subtree. Counted by T = 1 + x T^(r+1).
// `Mark` only distinguishes the serialized form of the two families that
// share this shape.
template <char Mark>
class SlotTree {
 public:
  SlotTree() = default;
  static SlotTree Node(std::vector<SlotTree> slots);

  bool empty() const { return slots_.empty(); }
  const std::vector<SlotTree>& slots() const { return slots_; }
  int size() const;

  // "-" for the empty tree, otherwise Mark(slot,slot,...).
  std::string Serialize() const;
  static SlotTree Parse(std::string_view text, unsigned r);

  bool operator==(const SlotTree&) const = default;

 private:
  std::vector<SlotTree> slots_;
};

// Rooted plane (r+1)-uniform hypertree in the slot convention: slot i of a
// hyperedge holds the subtree hanging from its i-th vertex, vertex 1 being
// the one it shares with its parent.
using PlaneHypertree = SlotTree<'e'>;
// (r+1)-ary tree: slot i is the child in direction i.
using AryTree = SlotTree<'v'>;

enum class Step : char { kUp = 'U', kDown = 'D' };

// r-Dyck path: Up rises by r, Down falls by 1, never below zero, ends at 0.
struct DyckPath {
  std::vector<Step> steps;

  std::string Serialize() const;
  static DyckPath Parse(std::string_view text);
  bool IsValid(unsigned r) const;
  bool operator==(const DyckPath&) const = default;
};

// Entries r and -1 with nonnegative prefix sums and total 0.
struct BallotSequence {
  std::vector<int> entries;

  std::string Serialize() const;
  static BallotSequence Parse(std::string_view text);
  bool IsValid(unsigned r) const;
  bool operator==(const BallotSequence&) const = default;
};

// Dissection of a convex polygon with vertices 0..sides-1 (counterclockwise)
// into (r+2)-gons. The distinguished edge is (0, 1). Diagonals are stored as
// sorted (low, high) pairs.
struct PolygonDivision {
  int sides = 2;
  std::vector<std::pair<int, int>> diagonals;

  // "sides:a-b,c-d"
  std::string Serialize() const;
  static PolygonDivision Parse(std::string_view text);
  bool IsValid(unsigned r) const;
  bool operator==(const PolygonDivision&) const = default;
};

// The underlying unrooted hypertree of a plane hypertree.
Hypertree to_hypertree(const PlaneHypertree& t, unsigned r);

DyckPath tree_to_dyck(const PlaneHypertree& t, unsigned r);
PlaneHypertree dyck_to_tree(const DyckPath& p, unsigned r);

BallotSequence dyck_to_ballot(const DyckPath& p, unsigned r);
DyckPath ballot_to_dyck(const BallotSequence& b, unsigned r);

AryTree hypertree_to_ary(const PlaneHypertree& t, unsigned r);
PlaneHypertree ary_to_hypertree(const AryTree& t, unsigned r);

PolygonDivision ary_to_polygon(const AryTree& t, unsigned r);
AryTree polygon_to_ary(const PolygonDivision& p, unsigned r);

std::vector<PlaneHypertree> enumerate_plane_hypertrees(unsigned r, int n);
std::vector<AryTree> enumerate_ary_trees(unsigned r, int n);
std::vector<DyckPath> enumerate_dyck_paths(unsigned r, int n);
std::vector<BallotSequence> enumerate_ballot_sequences(unsigned r, int n);
// Direct enumeration by diagonal subsets, independent of the tree bijection.
std::vector<PolygonDivision> enumerate_polygon_divisions(unsigned r, int n);

enum class Family { kPlaneHypertree, kDyck, kBallot, kAryTree, kPolygon };

inline constexpr Family kAllFamilies[] = {Family::kPlaneHypertree,
                                          Family::kDyck, Family::kBallot,
                                          Family::kAryTree, Family::kPolygon};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Largest family size enumerate() will materialize.
inline constexpr long kDefaultObjectBudget = 2'000'000;

// Serialized objects of one family, sorted. Throws BudgetExceeded when
// FC_n^(r) exceeds max_objects.
std::vector<std::string> enumerate(Family f, unsigned r, int n,
                                   long max_objects = kDefaultObjectBudget);

}  // namespace fusscat
