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

#include "fusscat/cli.h"

#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

namespace fusscat::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fusscat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Sequences) {
  EXPECT_EQ(Invoke({"fc1", "--r", "3", "--m", "3"}).out, "1415\n");
  EXPECT_EQ(Invoke({"fc", "--r", "2", "--m", "2", "--n-max", "2", "--format",
                 "plain"}).out,
            "1 4 144\n");
  EXPECT_EQ(Invoke({"aseq", "--r", "2", "--m", "2", "--n-max", "4"}).out,
            "1 1 9 126 2151\n");
  EXPECT_EQ(Invoke({"fuss", "--r", "2", "--n", "0"}).out, "1\n");
  EXPECT_EQ(Invoke({"fuss", "--r", "3", "--n", "4"}).out, "140\n");
  EXPECT_EQ(Invoke({"fuss", "--r", "2", "--n", "3", "--family", "polygon"}).out,
            "12\n");
}

TEST(CliTest, MethodsAgree) {
  for (const char* method : {"genfunc", "bruteforce", "theorem32", "auto"}) {
    auto o = Invoke({"fc", "--r", "2", "--m", "2", "--n-max", "2", "--method", method});
    EXPECT_EQ(o.code, kExitOk) << method;
    EXPECT_EQ(o.out, "1 4 144\n") << method;
  }
  EXPECT_EQ(Invoke({"aseq", "--r", "1", "--m", "2", "--n-max", "3", "--method",
                 "bruteforce"}).out,
            Invoke({"aseq", "--r", "1", "--m", "2", "--n-max", "3"}).out);
  EXPECT_EQ(Invoke({"fc1", "--r", "2", "--m", "3", "--method", "genfunc"}).out,
            "22\n");
}

TEST(CliTest, JsonRoundTripsByteForByte) {
  auto o = Invoke({"fc", "--r", "5", "--m", "4", "--n-max", "3", "--format", "json"});
  ASSERT_EQ(o.code, kExitOk);
  auto parsed = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(parsed.dump() + "\n", o.out);
  EXPECT_EQ(parsed["r"], 5);
  EXPECT_EQ(parsed["m"], 4);
  EXPECT_TRUE(parsed["values"][3].is_string());
}

TEST(CliTest, Emit) {
  SequenceResult s;
  s.r = 2;
  s.m = 2;
  s.method = "genfunc";
  s.values = {1, 1, 4};
  EXPECT_EQ(emit(s, Format::kJson),
            "{\"r\":2,\"m\":2,\"method\":\"genfunc\",\"values\":[\"1\",\"1\",\"4\"]}\n");
  EXPECT_EQ(emit(s, Format::kPlain), "1 1 4\n");
  s.values.clear();
  EXPECT_NE(emit(s, Format::kJson).find("\"values\":[]"), std::string::npos);
  s.values = {1, 4};
  EXPECT_EQ(emit(s, Format::kCsv), "n,value\n0,1\n1,4\n");
}

TEST(CliTest, ListsObjects) {
  auto o = Invoke({"fuss", "--r", "2", "--n", "2", "--family", "dyck", "--list"});
  EXPECT_EQ(o.out, "UDDUDD\nUDUDDD\nUUDDDD\n");
  auto e = Invoke({"enumerate", "--r", "1", "--n", "3", "--family", "hypertree"});
  EXPECT_EQ(e.code, kExitOk);
  EXPECT_EQ(std::count(e.out.begin(), e.out.end(), '\n'), 2);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Invoke({"fc1", "--r", "0", "--m", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"fc1", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"fc", "--r", "2", "--m", "2", "--n-max", "2", "--format",
                 "yaml"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"fuss", "--r", "2", "--n", "2", "--family", "shrub"}).code,
            kExitUsage);
  auto big = Invoke({"fc", "--r", "3", "--m", "3", "--n-max", "3", "--method",
                  "bruteforce"});
  EXPECT_EQ(big.code, kExitBudget);
  EXPECT_TRUE(big.out.empty());
  EXPECT_NE(big.err.find("budget"), std::string::npos);
  EXPECT_EQ(Invoke({"fc", "--r", "3", "--m", "3", "--n-max", "1", "--method",
                 "bruteforce"}).code,
            kExitOk);
}

TEST(CliTest, BudgetFromEnvironment) {
  ASSERT_EQ(setenv("FUSSCAT_BUDGET", "30", 1), 0);
  EXPECT_EQ(default_budget(), 30);
  auto o = Invoke({"fc", "--r", "2", "--m", "2", "--n-max", "3", "--method",
                "bruteforce"});
  unsetenv("FUSSCAT_BUDGET");
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "1 4 144 8064\n");
  EXPECT_EQ(default_budget(), 18);
  EXPECT_EQ(Invoke({"fc", "--r", "2", "--m", "2", "--n-max", "3", "--method",
                 "bruteforce", "--budget", "24"}).code,
            kExitOk);
}

TEST(CliTest, ReportStatusDrivesExitCode) {
  ValidationReport report;
  report.records.push_back({"a", "", "1", "1", CheckStatus::kPass});
  report.records.push_back({"b", "", "2", "3", CheckStatus::kPaperDiscrepancy});
  report.records.push_back({"c", "", "5", "-", CheckStatus::kSkippedBudget});
  EXPECT_TRUE(report.ok());
  auto json = nlohmann::ordered_json::parse(emit(report, Format::kJson));
  EXPECT_EQ(json["records"].size(), 3u);
  EXPECT_EQ(json["records"][1]["status"], "paper-discrepancy");
  report.records.push_back({"d", "", "5", "6", CheckStatus::kFail});
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.count(CheckStatus::kFail), 1u);
}

TEST(CliTest, ValidateIsDeterministic) {
  auto first = Invoke({"validate", "--format", "json"});
  auto second = Invoke({"validate", "--format", "json"});
  EXPECT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, second.out);
  auto json = nlohmann::ordered_json::parse(first.out);
  EXPECT_TRUE(json["ok"].get<bool>());
  std::vector<std::string> names;
  for (const auto& rec : json["records"]) names.push_back(rec["name"]);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}

}  // namespace
}  // namespace fusscat::cli
