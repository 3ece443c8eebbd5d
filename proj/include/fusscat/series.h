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

#include <string>
#include <vector>

#include "fusscat/exact.h"

namespace fusscat {

// A formal power series c_0 + c_1 x + ... + c_N x^N known exactly through the
// truncation order N. Coefficients beyond N are unknown, never zero-filled:
// binary operations demand equal orders so precision is never lost silently.
class TruncatedSeries {
 public:
  // The zero series of the given order.
  explicit TruncatedSeries(int order);
  // Order is coeffs.size() - 1; coeffs must be non-empty.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  static TruncatedSeries Constant(const Rational& c, int order);
  // The series x (requires order >= 1).
  static TruncatedSeries Variable(int order);
  static TruncatedSeries FromIntegers(const std::vector<long>& coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Drops coefficients above `order`. Raising the order is refused because
  // the dropped coefficients were never known.
  TruncatedSeries Truncated(int order) const;

  // Multiplies by x; the top coefficient falls off.
  TruncatedSeries ShiftUp() const;

  bool operator==(const TruncatedSeries&) const = default;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const TruncatedSeries& rhs);

  std::string ToString() const;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries Power(const TruncatedSeries& s, unsigned exponent);

// outer(inner(x)) through the common order. inner must have a zero constant
// term, otherwise every output coefficient depends on the unknown tail of
// outer and DomainError is thrown.
TruncatedSeries Compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

// s(c x): coefficient k is multiplied by c^k.
TruncatedSeries ScaleArgument(const TruncatedSeries& s, const Rational& c);

// The unique f with f(0) = 0 and f = x * G(f)^r, through `order`.
// Solved by direct iteration from f = 0; iteration k fixes coefficient k.
// Requires G(0) = 1 and G.order() >= order.
TruncatedSeries SolvePowerFixedPoint(const TruncatedSeries& g, unsigned r,
                                     int order);

// [x^n] f for f = x * phi(f), via (1/n) [z^(n-1)] phi(z)^n.
Rational LagrangeCoefficient(const TruncatedSeries& phi, int n);

}  // namespace fusscat
