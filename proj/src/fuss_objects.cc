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

#include "fusscat/fuss_objects.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace fusscat {
namespace {

void RequireR(unsigned r) {
  if (r < 1) throw UsageError("r must be positive");
}

void RequireN(int n) {
  if (n < 0) throw UsageError("n must be nonnegative");
}

template <char Mark>
class SlotTreeParser {
 public:
  SlotTreeParser(std::string_view text, unsigned r) : text_(text), r_(r) {}

  SlotTree<Mark> ParseAll() {
    SlotTree<Mark> t = ParseTree();
    if (pos_ != text_.size()) Fail("trailing characters");
    return t;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw UsageError("cannot parse tree '" + std::string(text_) + "': " + why);
  }

  void Expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  SlotTree<Mark> ParseTree() {
    if (pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      return {};
    }
    Expect(Mark);
    Expect('(');
    std::vector<SlotTree<Mark>> slots;
    for (unsigned i = 0; i <= r_; ++i) {
      if (i > 0) Expect(',');
      slots.push_back(ParseTree());
    }
    Expect(')');
    return SlotTree<Mark>::Node(std::move(slots));
  }

  std::string_view text_;
  unsigned r_;
  size_t pos_ = 0;
};

template <char Mark>
std::vector<SlotTree<Mark>> EnumerateSlotTrees(unsigned r, int n) {
  RequireR(r);
  RequireN(n);
  // by_size[k]: all trees with k nodes.
  std::vector<std::vector<SlotTree<Mark>>> by_size(n + 1);
  by_size[0].push_back({});
  for (int k = 1; k <= n; ++k) {
    std::vector<SlotTree<Mark>> slots(r + 1);
    std::function<void(unsigned, int)> fill = [&](unsigned slot, int left) {
      if (slot == r) {
        for (const auto& last : by_size[left]) {
          slots[slot] = last;
          by_size[k].push_back(SlotTree<Mark>::Node(slots));
        }
        return;
      }
      for (int take = 0; take <= left; ++take) {
        for (const auto& sub : by_size[take]) {
          slots[slot] = sub;
          fill(slot + 1, left - take);
        }
      }
    };
    fill(0, k - 1);
  }
  auto out = std::move(by_size[n]);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.Serialize() < b.Serialize();
  });
  return out;
}

void EmitDyck(const PlaneHypertree& t, std::vector<Step>* out) {
  if (t.empty()) return;
  out->push_back(Step::kUp);
  const auto& slots = t.slots();
  for (size_t i = 0; i < slots.size(); ++i) {
    EmitDyck(slots[i], out);
    if (i + 1 < slots.size()) out->push_back(Step::kDown);
  }
}

// T -> empty | U T (D T)^r, decided by whether the next step is Up.
PlaneHypertree ParseDyck(const std::vector<Step>& steps, unsigned r,
                         size_t* pos) {
  if (*pos >= steps.size() || steps[*pos] != Step::kUp) return {};
  ++*pos;
  std::vector<PlaneHypertree> slots;
  slots.push_back(ParseDyck(steps, r, pos));
  for (unsigned i = 0; i < r; ++i) {
    if (*pos >= steps.size() || steps[*pos] != Step::kDown) {
      throw UsageError("dyck_to_tree: not an r-Dyck path");
    }
    ++*pos;
    slots.push_back(ParseDyck(steps, r, pos));
  }
  return PlaneHypertree::Node(std::move(slots));
}

void BuildHyperedges(const PlaneHypertree& t, unsigned r, int attach,
                     int* next_vertex, std::vector<std::vector<int>>* edges) {
  if (t.empty()) return;
  std::vector<int> edge{attach};
  for (unsigned i = 0; i < r; ++i) edge.push_back((*next_vertex)++);
  edges->push_back(edge);
  for (unsigned i = 0; i <= r; ++i) {
    BuildHyperedges(t.slots()[i], r, edge[i], next_vertex, edges);
  }
}

template <char From, char To>
SlotTree<To> Relabel(const SlotTree<From>& t) {
  if (t.empty()) return {};
  std::vector<SlotTree<To>> slots;
  for (const auto& s : t.slots()) slots.push_back(Relabel<From, To>(s));
  return SlotTree<To>::Node(std::move(slots));
}

// Polygon vertices are handled in "unwrapped" coordinates 1..N where N stands
// for vertex 0, so the distinguished edge (0, 1) becomes the chord (1, N) and
// every sub-polygon is a contiguous range [lo, hi].
int Unwrap(int v, int sides) { return v == 0 ? sides : v; }
int Wrap(int v, int sides) { return v == sides ? 0 : v; }

void BuildDivision(const AryTree& t, unsigned r, int lo, int hi,
                   std::vector<std::pair<int, int>>* out, int sides) {
  int q = lo;
  for (const AryTree& child : t.slots()) {
    const int next = q + static_cast<int>(r) * child.size() + 1;
    if (!child.empty()) {
      int a = Wrap(q, sides), b = Wrap(next, sides);
      out->emplace_back(std::min(a, b), std::max(a, b));
      BuildDivision(child, r, q, next, out, sides);
    }
    q = next;
  }
  if (q != hi) throw ConsistencyError("ary_to_polygon: cell does not close");
}

class DivisionParser {
 public:
  DivisionParser(const PolygonDivision& p, unsigned r) : sides_(p.sides), r_(r) {
    adjacent_.resize(sides_ + 1);
    for (auto [a, b] : p.diagonals) {
      int x = Unwrap(a, sides_), y = Unwrap(b, sides_);
      if (x > y) std::swap(x, y);
      adjacent_[x].insert(y);
    }
  }

  AryTree Parse(int lo, int hi) {
    std::vector<int> cell{lo};
    while (cell.back() != hi) {
      const int q = cell.back();
      int next = q + 1;
      for (int y : adjacent_[q]) {
        if (y <= hi && !(q == lo && y == hi)) next = std::max(next, y);
      }
      cell.push_back(next);
    }
    if (cell.size() != r_ + 2) {
      throw UsageError("polygon_to_ary: cell is not an (r+2)-gon");
    }
    std::vector<AryTree> slots;
    for (size_t i = 1; i < cell.size(); ++i) {
      if (cell[i] - cell[i - 1] == 1) {
        slots.emplace_back();
      } else {
        ++used_;
        slots.push_back(Parse(cell[i - 1], cell[i]));
      }
    }
    return AryTree::Node(std::move(slots));
  }

  int used() const { return used_; }

 private:
  int sides_;
  unsigned r_;
  std::vector<std::set<int>> adjacent_;
  int used_ = 0;
};

bool Crosses(std::pair<int, int> d, std::pair<int, int> e) {
  auto [a, b] = d;
  auto [c, f] = e;
  return (a < c && c < b && b < f) || (c < a && a < f && f < b);
}

}  // namespace

BigInt fuss_closed_form(unsigned r, int n) {
  RequireR(r);
  RequireN(n);
  const unsigned long total = static_cast<unsigned long>(r + 1) * n;
  return RequireInteger(
      MakeRational(Binomial(total, n), BigInt(static_cast<unsigned long>(r) * n + 1)),
      "fuss_closed_form");
}

template <char Mark>
SlotTree<Mark> SlotTree<Mark>::Node(std::vector<SlotTree> slots) {
  if (slots.size() < 2) throw UsageError("a tree node needs r+1 >= 2 slots");
  SlotTree t;
  t.slots_ = std::move(slots);
  return t;
}

template <char Mark>
int SlotTree<Mark>::size() const {
  int n = empty() ? 0 : 1;
  for (const auto& s : slots_) n += s.size();
  return n;
}

template <char Mark>
std::string SlotTree<Mark>::Serialize() const {
  if (empty()) return "-";
  std::string out(1, Mark);
  out += '(';
  for (size_t i = 0; i < slots_.size(); ++i) {
    if (i > 0) out += ',';
    out += slots_[i].Serialize();
  }
  out += ')';
  return out;
}

template <char Mark>
SlotTree<Mark> SlotTree<Mark>::Parse(std::string_view text, unsigned r) {
  RequireR(r);
  return SlotTreeParser<Mark>(text, r).ParseAll();
}

template class SlotTree<'e'>;
template class SlotTree<'v'>;

std::string DyckPath::Serialize() const {
  std::string out;
  for (Step s : steps) out.push_back(static_cast<char>(s));
  return out;
}

DyckPath DyckPath::Parse(std::string_view text) {
  DyckPath p;
  for (char c : text) {
    if (c == 'U') {
      p.steps.push_back(Step::kUp);
    } else if (c == 'D') {
      p.steps.push_back(Step::kDown);
    } else {
      throw UsageError("DyckPath::Parse: unexpected character");
    }
  }
  return p;
}

bool DyckPath::IsValid(unsigned r) const {
  long height = 0;
  for (Step s : steps) {
    height += s == Step::kUp ? static_cast<long>(r) : -1;
    if (height < 0) return false;
  }
  return height == 0;
}

std::string BallotSequence::Serialize() const {
  std::string out;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out;
}

BallotSequence BallotSequence::Parse(std::string_view text) {
  BallotSequence b;
  while (!text.empty()) {
    size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw UsageError("BallotSequence::Parse: bad entry");
    }
    b.entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw UsageError("BallotSequence::Parse: trailing comma");
  }
  return b;
}

bool BallotSequence::IsValid(unsigned r) const {
  long sum = 0;
  for (int a : entries) {
    if (a != static_cast<int>(r) && a != -1) return false;
    sum += a;
    if (sum < 0) return false;
  }
  return sum == 0;
}

std::string PolygonDivision::Serialize() const {
  std::string out = std::to_string(sides) + ":";
  for (size_t i = 0; i < diagonals.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(diagonals[i].first) + "-" +
           std::to_string(diagonals[i].second);
  }
  return out;
}

PolygonDivision PolygonDivision::Parse(std::string_view text) {
  auto to_int = [](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("PolygonDivision::Parse: bad number");
    }
    return v;
  };
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("PolygonDivision::Parse: missing ':'");
  }
  PolygonDivision p;
  p.sides = to_int(text.substr(0, colon));
  text.remove_prefix(colon + 1);
  while (!text.empty()) {
    size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    size_t dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw UsageError("PolygonDivision::Parse: bad diagonal");
    }
    p.diagonals.emplace_back(to_int(item.substr(0, dash)),
                             to_int(item.substr(dash + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return p;
}

bool PolygonDivision::IsValid(unsigned r) const {
  if (r < 1 || sides < 2 || (sides - 2) % static_cast<int>(r) != 0) return false;
  const int cells = (sides - 2) / static_cast<int>(r);
  if (cells == 0) return diagonals.empty();
  if (static_cast<int>(diagonals.size()) != cells - 1) return false;
  for (size_t i = 0; i < diagonals.size(); ++i) {
    auto [a, b] = diagonals[i];
    if (a < 0 || b >= sides || b - a < 2 || (a == 0 && b == sides - 1)) {
      return false;
    }
    if ((b - a - 1) % static_cast<int>(r) != 0) return false;
    if (i > 0 && !(diagonals[i - 1] < diagonals[i])) return false;
    for (size_t j = 0; j < i; ++j) {
      if (Crosses(diagonals[j], diagonals[i])) return false;
    }
  }
  return true;
}

Hypertree to_hypertree(const PlaneHypertree& t, unsigned r) {
  RequireR(r);
  std::vector<std::vector<int>> edges;
  int next_vertex = 1;
  BuildHyperedges(t, r, 0, &next_vertex, &edges);
  return Hypertree::FromHyperedges(r, next_vertex, std::move(edges));
}

DyckPath tree_to_dyck(const PlaneHypertree& t, unsigned r) {
  RequireR(r);
  if (!t.empty() && t.slots().size() != r + 1) {
    throw UsageError("tree_to_dyck: arity does not match r");
  }
  DyckPath p;
  EmitDyck(t, &p.steps);
  return p;
}

PlaneHypertree dyck_to_tree(const DyckPath& p, unsigned r) {
  RequireR(r);
  if (!p.IsValid(r)) throw UsageError("dyck_to_tree: not an r-Dyck path");
  size_t pos = 0;
  PlaneHypertree t = ParseDyck(p.steps, r, &pos);
  if (pos != p.steps.size()) {
    throw UsageError("dyck_to_tree: not an r-Dyck path");
  }
  return t;
}

BallotSequence dyck_to_ballot(const DyckPath& p, unsigned r) {
  RequireR(r);
  if (!p.IsValid(r)) throw UsageError("dyck_to_ballot: not an r-Dyck path");
  BallotSequence b;
  for (Step s : p.steps) {
    b.entries.push_back(s == Step::kUp ? static_cast<int>(r) : -1);
  }
  return b;
}

DyckPath ballot_to_dyck(const BallotSequence& b, unsigned r) {
  RequireR(r);
  if (!b.IsValid(r)) throw UsageError("ballot_to_dyck: not a ballot sequence");
  DyckPath p;
  for (int a : b.entries) p.steps.push_back(a == -1 ? Step::kDown : Step::kUp);
  return p;
}

AryTree hypertree_to_ary(const PlaneHypertree& t, unsigned r) {
  RequireR(r);
  if (!t.empty() && t.slots().size() != r + 1) {
    throw UsageError("hypertree_to_ary: arity does not match r");
  }
  return Relabel<'e', 'v'>(t);
}

PlaneHypertree ary_to_hypertree(const AryTree& t, unsigned r) {
  RequireR(r);
  if (!t.empty() && t.slots().size() != r + 1) {
    throw UsageError("ary_to_hypertree: arity does not match r");
  }
  return Relabel<'v', 'e'>(t);
}

PolygonDivision ary_to_polygon(const AryTree& t, unsigned r) {
  RequireR(r);
  if (!t.empty() && t.slots().size() != r + 1) {
    throw UsageError("ary_to_polygon: arity does not match r");
  }
  PolygonDivision p;
  p.sides = static_cast<int>(r) * t.size() + 2;
  if (!t.empty()) BuildDivision(t, r, 1, p.sides, &p.diagonals, p.sides);
  std::sort(p.diagonals.begin(), p.diagonals.end());
  return p;
}

AryTree polygon_to_ary(const PolygonDivision& p, unsigned r) {
  RequireR(r);
  if (!p.IsValid(r)) throw UsageError("polygon_to_ary: invalid division");
  if (p.sides == 2) return {};
  DivisionParser parser(p, r);
  AryTree t = parser.Parse(1, p.sides);
  if (parser.used() != static_cast<int>(p.diagonals.size())) {
    throw UsageError("polygon_to_ary: diagonals left over");
  }
  return t;
}

std::vector<PlaneHypertree> enumerate_plane_hypertrees(unsigned r, int n) {
  return EnumerateSlotTrees<'e'>(r, n);
}

std::vector<AryTree> enumerate_ary_trees(unsigned r, int n) {
  return EnumerateSlotTrees<'v'>(r, n);
}

std::vector<DyckPath> enumerate_dyck_paths(unsigned r, int n) {
  RequireR(r);
  RequireN(n);
  std::vector<DyckPath> out;
  DyckPath cur;
  std::function<void(int, int, long)> walk = [&](int ups, int downs,
                                                 long height) {
    if (ups == 0 && downs == 0) {
      out.push_back(cur);
      return;
    }
    if (downs > 0 && height > 0) {
      cur.steps.push_back(Step::kDown);
      walk(ups, downs - 1, height - 1);
      cur.steps.pop_back();
    }
    if (ups > 0) {
      cur.steps.push_back(Step::kUp);
      walk(ups - 1, downs, height + static_cast<long>(r));
      cur.steps.pop_back();
    }
  };
  walk(n, static_cast<int>(r) * n, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.Serialize() < b.Serialize();
  });
  return out;
}

std::vector<BallotSequence> enumerate_ballot_sequences(unsigned r, int n) {
  RequireR(r);
  RequireN(n);
  std::vector<BallotSequence> out;
  BallotSequence cur;
  std::function<void(int, int, long)> walk = [&](int big, int small, long sum) {
    if (big == 0 && small == 0) {
      out.push_back(cur);
      return;
    }
    if (big > 0) {
      cur.entries.push_back(static_cast<int>(r));
      walk(big - 1, small, sum + static_cast<long>(r));
      cur.entries.pop_back();
    }
    if (small > 0 && sum > 0) {
      cur.entries.push_back(-1);
      walk(big, small - 1, sum - 1);
      cur.entries.pop_back();
    }
  };
  walk(n, static_cast<int>(r) * n, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.Serialize() < b.Serialize();
  });
  return out;
}

std::vector<PolygonDivision> enumerate_polygon_divisions(unsigned r, int n) {
  RequireR(r);
  RequireN(n);
  const int sides = static_cast<int>(r) * n + 2;
  // A diagonal can appear in a dissection into (r+2)-gons iff it leaves a
  // multiple of r vertices strictly on one side; non-crossing n-1 of them
  // then force every cell to be an (r+2)-gon.
  std::vector<std::pair<int, int>> candidates;
  for (int a = 0; a < sides; ++a) {
    for (int b = a + 2; b < sides; ++b) {
      if (a == 0 && b == sides - 1) continue;
      if ((b - a - 1) % static_cast<int>(r) == 0) candidates.emplace_back(a, b);
    }
  }
  std::vector<PolygonDivision> out;
  PolygonDivision cur;
  cur.sides = sides;
  const size_t need = n > 0 ? static_cast<size_t>(n - 1) : 0;
  std::function<void(size_t)> choose = [&](size_t from) {
    if (cur.diagonals.size() == need) {
      out.push_back(cur);
      return;
    }
    for (size_t i = from; i < candidates.size(); ++i) {
      bool ok = std::none_of(cur.diagonals.begin(), cur.diagonals.end(),
                             [&](auto d) { return Crosses(d, candidates[i]); });
      if (!ok) continue;
      cur.diagonals.push_back(candidates[i]);
      choose(i + 1);
      cur.diagonals.pop_back();
    }
  };
  choose(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.Serialize() < b.Serialize();
  });
  return out;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kPlaneHypertree:
      return "plane_hypertree";
    case Family::kDyck:
      return "dyck";
    case Family::kBallot:
      return "ballot";
    case Family::kAryTree:
      return "ary_tree";
    case Family::kPolygon:
      return "polygon";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<std::string> enumerate(Family f, unsigned r, int n,
                                   long max_objects) {
  if (fuss_closed_form(r, n) > max_objects) {
    throw BudgetExceeded("enumerate: FC_n^(r) exceeds the object budget of " +
                         std::to_string(max_objects));
  }
  std::vector<std::string> out;
  auto collect = [&](const auto& objects) {
    for (const auto& o : objects) out.push_back(o.Serialize());
  };
  switch (f) {
    case Family::kPlaneHypertree:
      collect(enumerate_plane_hypertrees(r, n));
      break;
    case Family::kDyck:
      collect(enumerate_dyck_paths(r, n));
      break;
    case Family::kBallot:
      collect(enumerate_ballot_sequences(r, n));
      break;
    case Family::kAryTree:
      collect(enumerate_ary_trees(r, n));
      break;
    case Family::kPolygon:
      collect(enumerate_polygon_divisions(r, n));
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fusscat
