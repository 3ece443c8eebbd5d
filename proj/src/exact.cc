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

#include "fusscat/exact.h"

namespace fusscat {

BigInt RequireInteger(const Rational& q, const std::string& what) {
  if (q.get_den() != 1) {
    throw ConsistencyError(what + ": expected an integer, got " + ToString(q));
  }
  return q.get_num();
}

BigInt Factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt Binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt Pow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

std::string ToString(const BigInt& v) { return v.get_str(); }

std::string ToString(const Rational& v) { return v.get_str(); }

std::vector<std::string> ToStrings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

}  // namespace fusscat
