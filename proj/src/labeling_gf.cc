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

#include "fusscat/labeling_gf.h"

#include <string>

#include "fusscat/smirnov.h"

namespace fusscat {
namespace {

void RequireParams(unsigned r, unsigned m, int n) {
  if (r < 1 || m < 1) throw UsageError("need r >= 1 and m >= 1");
  if (n < 0) throw UsageError("n must be nonnegative");
}

std::string Params(unsigned r, unsigned m, int n) {
  return "(r=" + std::to_string(r) + ", m=" + std::to_string(m) +
         ", n=" + std::to_string(n) + ")";
}

// x h_m(f) truncated at order n_max + 1, where f solves f = x l_m(f)^r.
TruncatedSeries LabelingSeries(unsigned r, unsigned m, int n_max,
                               const Rational& scale) {
  const int order = n_max + 1;
  TruncatedSeries f = SolvePowerFixedPoint(ell_series(m, order), r, order);
  if (scale != 1) f = ScaleArgument(f, scale);
  return Compose(h_series(m, order), f).ShiftUp();
}

}  // namespace

BigInt w_partitions(unsigned m, unsigned long k) {
  if (m < 1) throw DomainError("W_m: m must be positive");
  if (k % m != 0) {
    throw DomainError("W_m(k) needs m | k (m=" + std::to_string(m) +
                      ", k=" + std::to_string(k) + ")");
  }
  const unsigned long blocks = k / m;
  BigInt den = Pow(Factorial(m), blocks) * Factorial(blocks);
  return RequireInteger(MakeRational(Factorial(k), den), "W_m");
}

BigInt lambda_dim(unsigned r, unsigned long g) {
  if (r < 1) throw DomainError("lambda: r must be positive");
  return Binomial(r - 1 + g, r - 1);
}

TruncatedSeries ell_series(unsigned m, int order) {
  if (order < 0) throw UsageError("ell_series: negative order");
  std::vector<Rational> c;
  for (int d = 0; d <= order; ++d) {
    const unsigned long k = static_cast<unsigned long>(d) * m;
    c.emplace_back(w_partitions(m, k) * lambda_dim(m, k));
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries h_series(unsigned m, int order) {
  if (order < 0) throw UsageError("h_series: negative order");
  std::vector<Rational> c;
  for (int d = 0; d <= order; ++d) {
    c.emplace_back(w_partitions(m, static_cast<unsigned long>(d) * m));
  }
  return TruncatedSeries(std::move(c));
}

std::vector<BigInt> a_sequence(unsigned r, unsigned m, int n_max) {
  RequireParams(r, m, n_max);
  TruncatedSeries g = LabelingSeries(r, m, n_max, 1);
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) {
    out.push_back(RequireInteger(g[n + 1], "a_sequence" + Params(r, m, n)));
  }
  return out;
}

std::vector<BigInt> fc_sequence(unsigned r, unsigned m, int n_max) {
  RequireParams(r, m, n_max);
  const BigInt first = fc1(r, m);
  TruncatedSeries g = LabelingSeries(r, m, n_max, Rational(first));
  const std::vector<BigInt> labelings = a_sequence(r, m, n_max);
  std::vector<BigInt> out;
  BigInt power = 1;
  for (int n = 0; n <= n_max; ++n) {
    BigInt value = RequireInteger(g[n + 1], "fc_sequence" + Params(r, m, n));
    if (value != power * labelings[n]) {
      throw ConsistencyError("fc_sequence" + Params(r, m, n) +
                             ": FC_1^n |A_n| disagrees with the series");
    }
    out.push_back(std::move(value));
    power *= first;
  }
  return out;
}

std::vector<BigInt> a_direct_sequence(unsigned r, unsigned m, int n_max) {
  RequireParams(r, m, n_max);
  const int n = n_max;
  // Vertex weights by number of child hyperedges.
  std::vector<BigInt> inner_weight(n + 1), root_weight(n + 1);
  for (int d = 0; d <= n; ++d) {
    const unsigned long k = static_cast<unsigned long>(d) * m;
    root_weight[d] = w_partitions(m, k);
    inner_weight[d] = root_weight[d] * lambda_dim(m, k);
  }
  // edge[k]: weighted subtrees rooted at a hyperedge, k hyperedges in all.
  // forests[d][k]: ordered d-tuples of such subtrees, k hyperedges in all.
  // hang[k]: everything hanging from one non-root vertex, k hyperedges.
  std::vector<BigInt> edge(n + 1, 0), hang(n + 1, 0);
  std::vector<std::vector<BigInt>> forests(n + 1,
                                           std::vector<BigInt>(n + 1, 0));
  forests[0][0] = 1;
  for (int k = 0; k <= n; ++k) {
    if (k >= 1) {
      // The r non-root vertices of the top hyperedge share k-1 hyperedges.
      std::vector<BigInt> spread(k, 0);
      spread[0] = 1;
      for (unsigned v = 0; v < r; ++v) {
        std::vector<BigInt> next(k, 0);
        for (int a = 0; a < k; ++a) {
          if (spread[a] == 0) continue;
          for (int b = 0; a + b < k; ++b) next[a + b] += spread[a] * hang[b];
        }
        spread = std::move(next);
      }
      edge[k] = spread[k - 1];
    }
    for (int d = 1; d <= n; ++d) {
      BigInt total = 0;
      for (int s = 1; s <= k; ++s) total += edge[s] * forests[d - 1][k - s];
      forests[d][k] = total;
    }
    BigInt total = 0;
    for (int d = 0; d <= k; ++d) total += inner_weight[d] * forests[d][k];
    hang[k] = total;
  }
  std::vector<BigInt> out;
  for (int k = 0; k <= n; ++k) {
    BigInt total = 0;
    for (int d = 0; d <= k; ++d) total += root_weight[d] * forests[d][k];
    out.push_back(std::move(total));
  }
  return out;
}

BigInt a_direct(unsigned r, unsigned m, int n) {
  return a_direct_sequence(r, m, n).back();
}

}  // namespace fusscat
