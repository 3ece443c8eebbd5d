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

#include "fusscat/series.h"

#include <sstream>
#include <utility>

namespace fusscat {
namespace {

void RequireSameOrder(const TruncatedSeries& a, const TruncatedSeries& b,
                      const char* op) {
  if (a.order() != b.order()) {
    std::ostringstream msg;
    msg << op << ": order mismatch (" << a.order() << " vs " << b.order()
        << ")";
    throw UsageError(msg.str());
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw UsageError("series order must be nonnegative");
  coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw UsageError("series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::Constant(const Rational& c, int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::Variable(int order) {
  if (order < 1) throw UsageError("the series x needs order >= 1");
  TruncatedSeries s(order);
  s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::FromIntegers(const std::vector<long>& coeffs) {
  std::vector<Rational> q;
  q.reserve(coeffs.size());
  for (long c : coeffs) q.emplace_back(c);
  return TruncatedSeries(std::move(q));
}

TruncatedSeries TruncatedSeries::Truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw UsageError("truncation can only lower the order");
  }
  return TruncatedSeries(
      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::ShiftUp() const {
  TruncatedSeries out(order());
  for (int k = order(); k >= 1; --k) out.coeffs_[k] = coeffs_[k - 1];
  return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  RequireSameOrder(*this, rhs, "add");
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  RequireSameOrder(*this, rhs, "subtract");
  for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
  RequireSameOrder(*this, rhs, "multiply");
  const int n = order();
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  return *this;
}

std::string TruncatedSeries::ToString() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[k].get_str();
    if (k == 1) os << "*x";
    if (k > 1) os << "*x^" << k;
  }
  if (first) os << "0";
  os << " + O(x^" << order() + 1 << ")";
  return os.str();
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
  a += b;
  return a;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
  a -= b;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  out *= b;
  return out;
}

TruncatedSeries Power(const TruncatedSeries& s, unsigned exponent) {
  TruncatedSeries result = TruncatedSeries::Constant(1, s.order());
  TruncatedSeries base = s;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

TruncatedSeries Compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  RequireSameOrder(outer, inner, "compose");
  if (inner[0] != 0) {
    throw DomainError("compose: inner series must have zero constant term");
  }
  const int n = outer.order();
  TruncatedSeries result = TruncatedSeries::Constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    result *= inner;
    result += TruncatedSeries::Constant(outer[k], n);
  }
  return result;
}

TruncatedSeries ScaleArgument(const TruncatedSeries& s, const Rational& c) {
  std::vector<Rational> out(s.coeffs());
  Rational power = 1;
  for (auto& coeff : out) {
    coeff *= power;
    power *= c;
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries SolvePowerFixedPoint(const TruncatedSeries& g, unsigned r,
                                     int order) {
  if (g[0] != 1) {
    throw DomainError("fixed point: G must have constant term 1");
  }
  if (order < 0 || g.order() < order) {
    throw UsageError("fixed point: G is not known through the requested order");
  }
  const TruncatedSeries outer = g.Truncated(order);
  TruncatedSeries f(order);
  for (int iter = 0; iter < order; ++iter) {
    f = Power(Compose(outer, f), r).ShiftUp();
  }
  return f;
}

Rational LagrangeCoefficient(const TruncatedSeries& phi, int n) {
  if (n < 1) throw UsageError("lagrange: n must be positive");
  if (phi.order() < n - 1) {
    throw UsageError("lagrange: phi is not known through degree n-1");
  }
  if (phi[0] == 0) throw DomainError("lagrange: phi(0) must be nonzero");
  const TruncatedSeries p = Power(phi.Truncated(n - 1), static_cast<unsigned>(n));
  Rational out = p[n - 1] / n;
  out.canonicalize();
  return out;
}

}  // namespace fusscat
