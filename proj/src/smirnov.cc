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

#include "fusscat/smirnov.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

namespace fusscat {
namespace {

// Letters with the same remaining count are interchangeable, so a state only
// records the multiset of remaining counts of the unconstrained letters plus
// the letters that carry constraints: the previous letter (cannot repeat) and,
// for circular words, the first letter (cannot be last).
using Multiset = std::vector<unsigned>;  // sorted, zeros removed

Multiset Normalize(Multiset s) {
  s.erase(std::remove(s.begin(), s.end(), 0U), s.end());
  std::sort(s.begin(), s.end());
  return s;
}

Multiset Without(const Multiset& s, size_t index, unsigned add_back) {
  Multiset out = s;
  out.erase(out.begin() + static_cast<long>(index));
  if (add_back > 0) {
    out.insert(std::upper_bound(out.begin(), out.end(), add_back), add_back);
  }
  return out;
}

Multiset With(const Multiset& s, unsigned add) {
  Multiset out = s;
  if (add > 0) out.insert(std::upper_bound(out.begin(), out.end(), add), add);
  return out;
}

// Calls fn(index, multiplicity) once per distinct count in `s`.
template <typename Fn>
void ForEachDistinct(const Multiset& s, Fn&& fn) {
  for (size_t i = 0; i < s.size();) {
    size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    fn(i, static_cast<unsigned long>(j - i));
    i = j;
  }
}

std::string Key(std::initializer_list<unsigned> head, const Multiset& free) {
  std::string key;
  for (unsigned v : head) key.push_back(static_cast<char>(v));
  key.push_back('|');
  for (unsigned v : free) key.push_back(static_cast<char>(v));
  return key;
}

class LinearCounter {
 public:
  // Words over `free` (any letter) continuing after a letter with `last`
  // copies left, which may not come next.
  BigInt Count(const Multiset& free, unsigned last) {
    if (free.empty()) return last == 0 ? 1 : 0;
    std::string key = Key({last}, free);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    ForEachDistinct(free, [&](size_t i, unsigned long mult) {
      total += mult * Count(Without(free, i, last), free[i] - 1);
    });
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::unordered_map<std::string, BigInt> memo_;
};

class CircularCounter {
 public:
  // The first letter has `first` copies left; the previous letter is either
  // the first letter itself or another letter with `last` copies left.
  BigInt Count(unsigned first, bool last_is_first, unsigned last,
               const Multiset& free) {
    if (free.empty() && first == 0 && (last_is_first || last == 0)) {
      return last_is_first ? 0 : 1;
    }
    std::string key = Key({first, last_is_first ? 1U : 0U, last}, free);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    const unsigned back = last_is_first ? 0 : last;
    ForEachDistinct(free, [&](size_t i, unsigned long mult) {
      total += mult * Count(first, false, free[i] - 1, Without(free, i, back));
    });
    if (!last_is_first && first > 0) {
      total += Count(first - 1, true, 0, With(free, last));
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::unordered_map<std::string, BigInt> memo_;
};

void RequireSmallCounts(const ContentVector& content) {
  for (unsigned c : content) {
    if (c > 120) throw UsageError("smirnov: letter multiplicity too large");
  }
}

// Dense polynomial in k variables, each truncated at degree m.
class MultiSeries {
 public:
  MultiSeries(unsigned k, unsigned m) : k_(k), m_(m) {
    size_t cells = 1;
    for (unsigned i = 0; i < k; ++i) cells *= m + 1;
    coeffs_.assign(cells, BigInt(0));
  }

  static MultiSeries One(unsigned k, unsigned m) {
    MultiSeries s(k, m);
    s.coeffs_[0] = 1;
    return s;
  }

  // x_var / (1 + x_var) = x - x^2 + x^3 - ...
  static MultiSeries Damped(unsigned k, unsigned m, unsigned var) {
    MultiSeries s(k, m);
    for (unsigned j = 1; j <= m; ++j) {
      s.coeffs_[j * s.Stride(var)] = (j % 2 == 1) ? 1 : -1;
    }
    return s;
  }

  static MultiSeries Variable(unsigned k, unsigned m, unsigned var) {
    MultiSeries s(k, m);
    if (m >= 1) s.coeffs_[s.Stride(var)] = 1;
    return s;
  }

  bool IsZero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigInt& c) { return c == 0; });
  }

  const BigInt& ConstantTerm() const { return coeffs_[0]; }
  const BigInt& Top() const { return coeffs_.back(); }

  MultiSeries& operator+=(const MultiSeries& o) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  MultiSeries& operator-=(const MultiSeries& o) {
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  MultiSeries operator*(const MultiSeries& o) const {
    MultiSeries out(k_, m_);
    std::vector<unsigned> da(k_), db(k_);
    for (size_t a = 0; a < coeffs_.size(); ++a) {
      if (coeffs_[a] == 0) continue;
      Digits(a, &da);
      for (size_t b = 0; b < o.coeffs_.size(); ++b) {
        if (o.coeffs_[b] == 0) continue;
        Digits(b, &db);
        bool fits = true;
        for (unsigned v = 0; v < k_ && fits; ++v) fits = da[v] + db[v] <= m_;
        if (fits) out.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
      }
    }
    return out;
  }

  // 1 / (1 - u) for u without constant term. u is nilpotent under the
  // truncation, so the geometric sum is finite.
  static MultiSeries GeometricSum(const MultiSeries& u) {
    if (u.ConstantTerm() != 0) {
      throw ConsistencyError("geometric sum needs zero constant term");
    }
    MultiSeries total = One(u.k_, u.m_);
    MultiSeries power = total;
    while (true) {
      power = power * u;
      if (power.IsZero()) break;
      total += power;
    }
    return total;
  }

 private:
  size_t Stride(unsigned var) const {
    size_t s = 1;
    for (unsigned i = 0; i < var; ++i) s *= m_ + 1;
    return s;
  }

  void Digits(size_t index, std::vector<unsigned>* out) const {
    for (unsigned v = 0; v < k_; ++v) {
      (*out)[v] = static_cast<unsigned>(index % (m_ + 1));
      index /= m_ + 1;
    }
  }

  unsigned k_;
  unsigned m_;
  std::vector<BigInt> coeffs_;
};

}  // namespace

BigInt linear_smirnov_count(const ContentVector& content) {
  RequireSmallCounts(content);
  Multiset all = Normalize(content);
  if (all.empty()) return 1;
  LinearCounter counter;
  BigInt total = 0;
  ForEachDistinct(all, [&](size_t i, unsigned long mult) {
    total += mult * counter.Count(Without(all, i, 0), all[i] - 1);
  });
  return total;
}

BigInt circular_smirnov_count(const ContentVector& content) {
  RequireSmallCounts(content);
  const unsigned long length =
      std::accumulate(content.begin(), content.end(), 0UL);
  if (length < 2) {
    throw UsageError("circular_smirnov_count: total length must be >= 2");
  }
  Multiset all = Normalize(content);
  CircularCounter counter;
  BigInt total = 0;
  ForEachDistinct(all, [&](size_t i, unsigned long mult) {
    total += mult * counter.Count(all[i] - 1, true, 0, Without(all, i, 0));
  });
  return total;
}

BigInt fc1(unsigned r, unsigned m) {
  if (r < 1) throw UsageError("fc1: r must be positive");
  if (m == 0) return 1;
  BigInt words = circular_smirnov_count(ContentVector(r + 1, m));
  return RequireInteger(MakeRational(words, Factorial(r + 1)),
                        "fc1(r=" + std::to_string(r) +
                            ", m=" + std::to_string(m) + ")");
}

BigInt circular_smirnov_gf_coefficient(unsigned r, unsigned m,
                                       long max_cells) {
  if (r < 1 || m < 1) {
    throw UsageError("circular_smirnov_gf_coefficient: need r, m >= 1");
  }
  const unsigned k = r + 1;
  double cells = 1;
  for (unsigned i = 0; i < k; ++i) cells *= m + 1;
  if (cells > static_cast<double>(max_cells)) {
    throw BudgetExceeded("circular_smirnov_gf_coefficient: " +
                         std::to_string(static_cast<long>(cells)) +
                         " series cells exceed cap " +
                         std::to_string(max_cells));
  }
  MultiSeries circular(k, m);
  for (unsigned i = 0; i < k; ++i) {
    // Smirnov words over the alphabet without letter i.
    MultiSeries others(k, m);
    for (unsigned j = 0; j < k; ++j) {
      if (j != i) others += MultiSeries::Damped(k, m, j);
    }
    MultiSeries smirnov_rest = MultiSeries::GeometricSum(others);
    smirnov_rest -= MultiSeries::One(k, m);
    // Words x_i w_1 x_i w_2 ... x_i w_p with each w nonempty and free of x_i.
    MultiSeries block = MultiSeries::Variable(k, m, i) * smirnov_rest;
    MultiSeries blocks = MultiSeries::GeometricSum(block);
    blocks -= MultiSeries::One(k, m);
    circular += blocks;
    circular += MultiSeries::Variable(k, m, i);
  }
  return circular.Top();
}

}  // namespace fusscat
