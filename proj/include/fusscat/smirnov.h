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

namespace fusscat {

// Letter multiplicities: counts[i] copies of letter i.
using ContentVector = std::vector<unsigned>;

// Words with exactly this content and no two equal adjacent letters.
// The empty content has one (empty) word.
BigInt linear_smirnov_count(const ContentVector& content);

// Smirnov words whose first and last letters also differ. Requires total
// length >= 2.
BigInt circular_smirnov_count(const ContentVector& content);

// FC_1^(r,m): circular Smirnov words on r+1 letters, m of each, divided by
// (r+1)!. m = 0 gives 1 (the empty tour is a single class).
BigInt fc1(unsigned r, unsigned m);

// Default cap on dense multivariate series size, (m+1)^(r+1) cells.
inline constexpr long kDefaultGfCells = 4096;

// [(x_1...x_{r+1})^m] of the circular Smirnov generating function, built from
// S = 1/(1 - sum x_i/(1+x_i)) with every variable truncated at degree m.
// Throws BudgetExceeded when (m+1)^(r+1) > max_cells.
BigInt circular_smirnov_gf_coefficient(unsigned r, unsigned m,
                                       long max_cells = kDefaultGfCells);

}  // namespace fusscat
