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
#include "fusscat/series.h"

namespace fusscat {

// W_m(k): ways to split a k-set into blocks of size m. DomainError if m does
// not divide k.
BigInt w_partitions(unsigned m, unsigned long k);

// lambda(r, g) = C(r-1+g, r-1): degree-g monomials in r variables.
BigInt lambda_dim(unsigned r, unsigned long g);

// l_m(x) = sum_d W_m(dm) lambda(m, dm) x^d
TruncatedSeries ell_series(unsigned m, int order);
// h_m(x) = sum_d W_m(dm) x^d
TruncatedSeries h_series(unsigned m, int order);

// |A_{mn}^(r)| for n = 0..n_max, read off x h_m(f) with f = x l_m(f)^r.
std::vector<BigInt> a_sequence(unsigned r, unsigned m, int n_max);

// FC_n^(r,m) for n = 0..n_max from x h_m(f(FC_1 x)). Each value is checked
// against FC_1^n |A_n|; a mismatch throws ConsistencyError.
std::vector<BigInt> fc_sequence(unsigned r, unsigned m, int n_max);

// |A_{mn}^(r)| by a plain integer recursion over colored plane hypertrees
// (each vertex holds an ordered list of child hyperedges): a non-root vertex
// with d children weighs W_m(dm) lambda(m, dm), the root vertex W_m(dm).
// Shares no code with the series route.
BigInt a_direct(unsigned r, unsigned m, int n);
std::vector<BigInt> a_direct_sequence(unsigned r, unsigned m, int n_max);

}  // namespace fusscat
