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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusscat/exact.h"

namespace fusscat::cli {

enum class Command { kFc1, kFc, kAseq, kFuss, kEnumerate, kValidate };
enum class Method { kAuto, kGenfunc, kBruteforce, kTheorem32 };
enum class Format { kPlain, kJson, kCsv };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);
std::optional<Format> parse_format(std::string_view name);

struct ComputationRequest {
  Command command = Command::kFc;
  unsigned r = 1;
  unsigned m = 1;
  int n = 0;  // n for fuss/enumerate, n_max for fc/aseq
  Method method = Method::kAuto;
  Format format = Format::kPlain;
  std::string family;  // fuss/enumerate; empty = closed form only
  bool list = false;
  int budget = 0;  // brute-force cap on (r+1)*n*m
};

// A computed sequence and the labels needed to print it.
struct SequenceResult {
  unsigned r = 1;
  std::optional<unsigned> m;
  std::optional<std::string> family;
  std::string method;
  std::string index_name = "n";
  int first_index = 0;
  std::vector<BigInt> values;
};

enum class CheckStatus { kPass, kFail, kSkippedBudget, kPaperDiscrepancy };
std::string_view status_name(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string parameters;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::kPass;
};

struct ValidationReport {
  std::vector<CheckRecord> records;  // sorted by name

  // False iff some record has status kFail.
  bool ok() const;
  size_t count(CheckStatus s) const;
};

// plain: space-separated decimals. json: {"r", "m", "method", "values"} with
// values as decimal strings. csv: "n,value" header plus one row per value.
std::string emit(const SequenceResult& result, Format format);
std::string emit(const ValidationReport& report, Format format);
// Enumerated objects: one per line, a JSON object, or index,object rows.
std::string emit_objects(unsigned r, int n, std::string_view family,
                         const std::vector<std::string>& objects,
                         Format format);

// The full cross-validation suite. Brute-force checks larger than `budget`
// are reported as skipped-budget.
ValidationReport validate(int budget);

// Budget from FUSSCAT_BUDGET, else the library default.
int default_budget();

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Executes a parsed request. Results go to `out`, diagnostics to `err`.
int run(const ComputationRequest& request, std::ostream& out,
        std::ostream& err);

// Parses argv and dispatches to run().
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace fusscat::cli
