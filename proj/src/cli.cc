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

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusscat/fuss_objects.h"
#include "fusscat/hypertree.h"
#include "fusscat/labeling_gf.h"
#include "fusscat/smirnov.h"
#include "fusscat/walks.h"

namespace fusscat::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string JoinValues(const std::vector<BigInt>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += values[i].get_str();
  }
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string DescribeHypertree(const Hypertree& t) {
  std::string out = "aut=" + t.aut_order().get_str() + " edges=";
  const auto& edges = t.hyperedges();
  for (size_t e = 0; e < edges.size(); ++e) {
    if (e > 0) out += ',';
    for (size_t i = 0; i < edges[e].size(); ++i) {
      if (i > 0) out += '-';
      out += std::to_string(edges[e][i]);
    }
  }
  return out;
}

std::vector<BigInt> Theorem32Sequence(unsigned r, unsigned m, int n_max) {
  const BigInt first = fc1(r, m);
  std::vector<BigInt> out;
  BigInt power = 1;
  for (const BigInt& a : a_direct_sequence(r, m, n_max)) {
    out.push_back(power * a);
    power *= first;
  }
  return out;
}

std::vector<BigInt> BruteforceSequence(unsigned r, unsigned m, int n_max,
                                       int budget) {
  std::vector<BigInt> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(fc_bruteforce(r, m, n, budget));
  return out;
}

SequenceResult Compute(const ComputationRequest& req) {
  SequenceResult res;
  res.r = req.r;
  switch (req.command) {
    case Command::kFc1: {
      res.m = req.m;
      res.index_name = "m";
      res.first_index = static_cast<int>(req.m);
      switch (req.method) {
        case Method::kAuto:
          res.method = "smirnov";
          res.values = {fc1(req.r, req.m)};
          break;
        case Method::kGenfunc: {
          res.method = "genfunc";
          if (req.m == 0) {
            res.values = {1};
            break;
          }
          BigInt words = circular_smirnov_gf_coefficient(req.r, req.m);
          res.values = {RequireInteger(
              MakeRational(words, Factorial(req.r + 1)), "fc1 genfunc")};
          break;
        }
        case Method::kBruteforce:
          res.method = "bruteforce";
          res.values = {req.m == 0 ? BigInt(1)
                                   : fc_bruteforce(req.r, req.m, 1, req.budget)};
          break;
        case Method::kTheorem32:
          throw UsageError("fc1 does not support --method theorem32");
      }
      return res;
    }
    case Command::kFc:
    case Command::kAseq: {
      res.m = req.m;
      const bool fc = req.command == Command::kFc;
      const Method method =
          req.method == Method::kAuto ? Method::kGenfunc : req.method;
      res.method = std::string(method_name(method));
      std::vector<BigInt> values;
      switch (method) {
        case Method::kGenfunc:
        case Method::kAuto:
          values = fc ? fc_sequence(req.r, req.m, req.n)
                      : a_sequence(req.r, req.m, req.n);
          break;
        case Method::kTheorem32:
          values = fc ? Theorem32Sequence(req.r, req.m, req.n)
                      : a_direct_sequence(req.r, req.m, req.n);
          break;
        case Method::kBruteforce: {
          values = BruteforceSequence(req.r, req.m, req.n, req.budget);
          if (!fc) {
            // |A_n| = FC_n / FC_1^n
            const BigInt first = fc1(req.r, req.m);
            BigInt power = 1;
            for (auto& v : values) {
              v = RequireInteger(MakeRational(v, power), "aseq bruteforce");
              power *= first;
            }
          }
          break;
        }
      }
      res.values = std::move(values);
      return res;
    }
    case Command::kFuss: {
      res.index_name = "n";
      res.first_index = req.n;
      if (req.family.empty()) {
        res.method = "closed_form";
        res.values = {fuss_closed_form(req.r, req.n)};
      } else {
        auto family = parse_family(req.family);
        if (!family) throw UsageError("unknown family '" + req.family + "'");
        res.family = req.family;
        res.method = "enumerate";
        res.values = {BigInt(static_cast<unsigned long>(
            enumerate(*family, req.r, req.n).size()))};
      }
      return res;
    }
    case Command::kEnumerate:
    case Command::kValidate:
      break;
  }
  throw UsageError("command does not produce a sequence");
}

std::vector<std::string> ListObjects(const ComputationRequest& req,
                                     std::string* family_out) {
  std::string family = req.family.empty() ? "plane_hypertree" : req.family;
  *family_out = family;
  if (family == "hypertree") {
    std::vector<std::string> out;
    for (const Hypertree& t : enumerate_hypertrees(req.r, req.n)) {
      out.push_back(DescribeHypertree(t));
    }
    return out;
  }
  auto f = parse_family(family);
  if (!f) throw UsageError("unknown family '" + family + "'");
  return enumerate(*f, req.r, req.n);
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kAuto:
      return "auto";
    case Method::kGenfunc:
      return "genfunc";
    case Method::kBruteforce:
      return "bruteforce";
    case Method::kTheorem32:
      return "theorem32";
  }
  return "auto";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kAuto, Method::kGenfunc, Method::kBruteforce,
                   Method::kTheorem32}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "plain") return Format::kPlain;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  return std::nullopt;
}

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkippedBudget:
      return "skipped-budget";
    case CheckStatus::kPaperDiscrepancy:
      return "paper-discrepancy";
  }
  return "fail";
}

bool ValidationReport::ok() const { return count(CheckStatus::kFail) == 0; }

size_t ValidationReport::count(CheckStatus s) const {
  return static_cast<size_t>(
      std::count_if(records.begin(), records.end(),
                    [s](const CheckRecord& c) { return c.status == s; }));
}

std::string emit(const SequenceResult& result, Format format) {
  switch (format) {
    case Format::kPlain:
      return JoinValues(result.values) + "\n";
    case Format::kJson: {
      Json j;
      j["r"] = result.r;
      if (result.m) j["m"] = *result.m;
      if (result.family) j["family"] = *result.family;
      j["method"] = result.method;
      j["values"] = Json::array();
      for (const auto& v : result.values) j["values"].push_back(v.get_str());
      return j.dump() + "\n";
    }
    case Format::kCsv: {
      std::string out = result.index_name + ",value\n";
      for (size_t i = 0; i < result.values.size(); ++i) {
        out += std::to_string(result.first_index + static_cast<int>(i)) + "," +
               result.values[i].get_str() + "\n";
      }
      return out;
    }
  }
  return {};
}

std::string emit(const ValidationReport& report, Format format) {
  switch (format) {
    case Format::kPlain: {
      std::ostringstream os;
      for (const auto& c : report.records) {
        os << status_name(c.status) << ' ' << c.name << " [" << c.parameters
           << "] expected=" << c.expected << " actual=" << c.actual << '\n';
      }
      os << "summary: " << report.records.size() << " checks, "
         << report.count(CheckStatus::kPass) << " pass, "
         << report.count(CheckStatus::kFail) << " fail, "
         << report.count(CheckStatus::kSkippedBudget) << " skipped-budget, "
         << report.count(CheckStatus::kPaperDiscrepancy)
         << " paper-discrepancy\n";
      return os.str();
    }
    case Format::kJson: {
      Json j;
      j["ok"] = report.ok();
      j["records"] = Json::array();
      for (const auto& c : report.records) {
        Json rec;
        rec["name"] = c.name;
        rec["parameters"] = c.parameters;
        rec["expected"] = c.expected;
        rec["actual"] = c.actual;
        rec["status"] = std::string(status_name(c.status));
        j["records"].push_back(std::move(rec));
      }
      return j.dump() + "\n";
    }
    case Format::kCsv: {
      std::string out = "name,parameters,expected,actual,status\n";
      for (const auto& c : report.records) {
        out += CsvField(c.name) + "," + CsvField(c.parameters) + "," +
               CsvField(c.expected) + "," + CsvField(c.actual) + "," +
               std::string(status_name(c.status)) + "\n";
      }
      return out;
    }
  }
  return {};
}

std::string emit_objects(unsigned r, int n, std::string_view family,
                         const std::vector<std::string>& objects,
                         Format format) {
  switch (format) {
    case Format::kPlain: {
      std::string out;
      for (const auto& o : objects) out += o + "\n";
      return out;
    }
    case Format::kJson: {
      Json j;
      j["r"] = r;
      j["n"] = n;
      j["family"] = std::string(family);
      j["objects"] = objects;
      return j.dump() + "\n";
    }
    case Format::kCsv: {
      std::string out = "index,object\n";
      for (size_t i = 0; i < objects.size(); ++i) {
        out += std::to_string(i) + "," + CsvField(objects[i]) + "\n";
      }
      return out;
    }
  }
  return {};
}

int default_budget() {
  if (const char* env = std::getenv("FUSSCAT_BUDGET")) {
    try {
      size_t used = 0;
      int value = std::stoi(env, &used);
      if (used == std::string_view(env).size() && value >= 0) return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultWalkBudget;
}

int run(const ComputationRequest& request, std::ostream& out,
        std::ostream& err) {
  try {
    switch (request.command) {
      case Command::kValidate: {
        ValidationReport report = validate(request.budget);
        out << emit(report, request.format);
        return report.ok() ? kExitOk : kExitValidationFailed;
      }
      case Command::kEnumerate: {
        std::string family;
        auto objects = ListObjects(request, &family);
        out << emit_objects(request.r, request.n, family, objects,
                            request.format);
        return kExitOk;
      }
      case Command::kFuss:
        if (request.list) {
          std::string family;
          auto objects = ListObjects(request, &family);
          out << emit_objects(request.r, request.n, family, objects,
                              request.format);
          return kExitOk;
        }
        [[fallthrough]];
      default:
        out << emit(Compute(request), request.format);
        return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "fusscat: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "fusscat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "fusscat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "fusscat: internal consistency failure: " << e.what() << '\n';
    return kExitValidationFailed;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Hypergraph Fuss-Catalan numbers: exact computation, object "
               "enumeration and cross-validation."};
  app.name("fusscat");
  app.require_subcommand(1);
  app.fallthrough();

  ComputationRequest req;
  std::string format = "plain";
  std::string method = "auto";
  std::optional<int> budget;
  app.add_option("--format", format, "plain, json or csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--budget", budget,
                 "brute-force cap on (r+1)*n*m (env FUSSCAT_BUDGET)")
      ->check(CLI::NonNegativeNumber);

  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", req.r, "hyperedge size minus one")
        ->required()
        ->check(CLI::Range(1U, 4096U));
  };
  auto add_m = [&](CLI::App* sub, unsigned lowest) {
    sub->add_option("--m", req.m, "edge multiplicity")
        ->required()
        ->check(CLI::Range(lowest, 120U));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "auto, genfunc, bruteforce, theorem32")
        ->check(CLI::IsMember({"auto", "genfunc", "bruteforce", "theorem32"}));
  };

  auto* fc1_cmd = app.add_subcommand("fc1", "FC_1^(r,m)");
  add_r(fc1_cmd);
  add_m(fc1_cmd, 0);
  add_method(fc1_cmd);

  auto* fc_cmd = app.add_subcommand("fc", "FC_n^(r,m) for n = 0..n_max");
  add_r(fc_cmd);
  add_m(fc_cmd, 1);
  fc_cmd->add_option("--n-max", req.n)->required()->check(CLI::Range(0, 100000));
  add_method(fc_cmd);

  auto* aseq_cmd =
      app.add_subcommand("aseq", "admissible labeling counts |A_n| for n = 0..n_max");
  add_r(aseq_cmd);
  add_m(aseq_cmd, 1);
  aseq_cmd->add_option("--n-max", req.n)->required()->check(CLI::Range(0, 100000));
  add_method(aseq_cmd);

  auto* fuss_cmd = app.add_subcommand("fuss", "Fuss-Catalan count or objects");
  add_r(fuss_cmd);
  fuss_cmd->add_option("--n", req.n)->required()->check(CLI::Range(0, 100000));
  fuss_cmd->add_option("--family", req.family,
                       "plane_hypertree, dyck, ballot, ary_tree, polygon");
  fuss_cmd->add_flag("--list", req.list, "print the objects");

  auto* enum_cmd = app.add_subcommand(
      "enumerate", "list objects of a family (or 'hypertree' classes)");
  add_r(enum_cmd);
  enum_cmd->add_option("--n", req.n)->required()->check(CLI::Range(0, 100000));
  enum_cmd->add_option("--family", req.family)->required();

  auto* validate_cmd =
      app.add_subcommand("validate", "run the cross-validation suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "fusscat: " << e.what() << "\n"
        << "Run with --help for more information.\n";
    return kExitUsage;
  }

  req.format = *parse_format(format);
  req.method = *parse_method(method);
  req.budget = budget ? *budget : default_budget();
  if (fc1_cmd->parsed()) req.command = Command::kFc1;
  if (fc_cmd->parsed()) req.command = Command::kFc;
  if (aseq_cmd->parsed()) req.command = Command::kAseq;
  if (fuss_cmd->parsed()) req.command = Command::kFuss;
  if (enum_cmd->parsed()) req.command = Command::kEnumerate;
  if (validate_cmd->parsed()) req.command = Command::kValidate;
  return run(req, out, err);
}

}  // namespace fusscat::cli
