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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fusscat {

// Arbitrary-precision integer and rational scalars. mpq_class values are kept
// canonical (lowest terms, positive denominator) by every constructor below.
using BigInt = mpz_class;
using Rational = mpq_class;

// Bad arguments from a caller: mismatched orders, malformed objects, etc.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematically undefined request (e.g. composition with a nonzero
// constant term, W_m(k) with m not dividing k).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A brute-force computation was refused because it exceeds the configured
// size cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value that is an integer by theorem came out otherwise. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rational MakeRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Returns the integer value of `q`, throwing ConsistencyError with `what`
// as context when `q` is not integral.
BigInt RequireInteger(const Rational& q, const std::string& what);

BigInt Factorial(unsigned long n);
BigInt Binomial(unsigned long n, unsigned long k);
BigInt Pow(const BigInt& base, unsigned long exp);

std::string ToString(const BigInt& v);
std::string ToString(const Rational& v);
std::vector<std::string> ToStrings(const std::vector<BigInt>& values);

}  // namespace fusscat
