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

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <future>
#include <set>
#include <string>

#include "fusscat/cli.h"
#include "fusscat/fuss_objects.h"
#include "fusscat/hypertree.h"
#include "fusscat/labeling_gf.h"
#include "fusscat/reference_tables.h"
#include "fusscat/smirnov.h"
#include "fusscat/walks.h"

namespace fusscat::cli {
namespace {

using Records = std::vector<CheckRecord>;

std::string Join(const std::vector<std::string>& items) {
  std::string out;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ' ';
    out += items[i];
  }
  return out;
}

std::vector<std::string> Strings(const std::vector<std::string_view>& in,
                                 size_t from, size_t to) {
  std::vector<std::string> out;
  for (size_t i = from; i < to && i < in.size(); ++i) out.emplace_back(in[i]);
  return out;
}

CheckRecord Compare(std::string name, std::string params,
                    const std::vector<std::string>& expected,
                    const std::vector<std::string>& actual) {
  return {std::move(name), std::move(params), Join(expected), Join(actual),
          expected == actual ? CheckStatus::kPass : CheckStatus::kFail};
}

// A published value above 2^53 that agrees to double precision.
bool IsRoundingArtifact(const std::string& published, const BigInt& exact) {
  BigInt p(published);
  if (p < BigInt(1) << 53) return false;
  mpf_class diff(abs(p - exact)), ref(exact);
  return ref > 0 && mpf_class(diff / ref) < 1e-14;
}

// Published entries beyond the gated prefix. Mismatches explained by double
// rounding or by a dropped term are discrepancies in the table, anything else
// is a failure.
CheckRecord CompareTail(std::string name, std::string params,
                        const std::vector<std::string_view>& published,
                        size_t from, const std::function<BigInt(size_t)>& exact) {
  std::vector<std::string> expected, actual;
  CheckStatus status = CheckStatus::kPass;
  size_t shift = 0;
  for (size_t i = from; i < published.size(); ++i) {
    const std::string pub(published[i]);
    BigInt value = exact(i + shift);
    if (pub != value.get_str() && !IsRoundingArtifact(pub, value)) {
      BigInt skipped = exact(i + shift + 1);
      if (pub == skipped.get_str() || IsRoundingArtifact(pub, skipped)) {
        // The table jumped over index i + shift.
        ++shift;
        value = std::move(skipped);
      } else {
        status = CheckStatus::kFail;
      }
    }
    if (pub != value.get_str() && status == CheckStatus::kPass) {
      status = CheckStatus::kPaperDiscrepancy;
    }
    expected.push_back(pub);
    actual.push_back(value.get_str());
  }
  return {std::move(name), std::move(params), Join(expected), Join(actual),
          status};
}

Records Fc1Checks() {
  // Gated prefixes stay below 2^53, where the published table is exact.
  const std::map<unsigned, unsigned> gated = {{2, 12}, {3, 8}, {4, 6},
                                              {5, 4}, {6, 4}, {7, 3}, {8, 3}};
  Records out;
  for (const auto& row : reference::Fc1Rows()) {
    const unsigned last = gated.at(row.r);
    std::vector<std::string> actual;
    for (unsigned m = 0; m <= last; ++m) actual.push_back(fc1(row.r, m).get_str());
    out.push_back(Compare("published.fc1.r" + std::to_string(row.r),
                          "r=" + std::to_string(row.r) + " m=0.." +
                              std::to_string(last),
                          Strings(row.values, 0, last + 1), actual));
    if (row.values.size() > last + 1) {
      const unsigned r = row.r;
      out.push_back(CompareTail(
          "published.fc1.r" + std::to_string(r) + ".tail",
          "r=" + std::to_string(r) + " m>" + std::to_string(last), row.values,
          last + 1, [r](size_t m) { return fc1(r, static_cast<unsigned>(m)); }));
    }
  }
  return out;
}

Records LabelingChecks() {
  Records out;
  for (const auto& row : reference::LabelingRows()) {
    const int last = (row.r == 2 && row.m == 2) ? 10 : 8;
    const int total = static_cast<int>(row.values.size()) + 1;
    const auto values = a_sequence(row.r, row.m, total);
    const std::string tag =
        "r" + std::to_string(row.r) + "m" + std::to_string(row.m);
    const std::string params =
        "r=" + std::to_string(row.r) + " m=" + std::to_string(row.m);
    std::vector<BigInt> head(values.begin(), values.begin() + last + 1);
    out.push_back(Compare("published.labeling." + tag,
                          params + " n=0.." + std::to_string(last),
                          Strings(row.values, 0, last + 1), ToStrings(head)));
    out.push_back(CompareTail("published.labeling." + tag + ".tail",
                              params + " n>" + std::to_string(last), row.values,
                              last + 1, [&values](size_t n) { return values[n]; }));
  }
  return out;
}

Records ReductionChecks() {
  Records out;
  for (unsigned r = 1; r <= 4; ++r) {
    std::vector<BigInt> closed;
    for (int n = 0; n <= 10; ++n) closed.push_back(fuss_closed_form(r, n));
    out.push_back(Compare("reduction.m1.r" + std::to_string(r) + ".closed_form",
                          "r=" + std::to_string(r) + " m=1 n=0..10",
                          ToStrings(closed), ToStrings(fc_sequence(r, 1, 10))));
  }
  for (const auto& row : reference::FussRows()) {
    const auto values = fc_sequence(row.r, 1, static_cast<int>(row.values.size()) - 1);
    out.push_back(Compare("reduction.m1.r" + std::to_string(row.r) + ".published",
                          "r=" + std::to_string(row.r) + " m=1",
                          Strings(row.values, 0, row.values.size()),
                          ToStrings(values)));
  }
  const auto& hc = reference::HypergraphCatalanRow();
  out.push_back(Compare("reduction.r1.m2.hypergraph_catalan", "r=1 m=2 n=0..4",
                        Strings(hc.values, 0, hc.values.size()),
                        ToStrings(fc_sequence(1, 2, 4))));
  return out;
}

Records BruteforceChecks(int budget) {
  Records out;
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned m = 1; m <= 3; ++m) {
      const auto series = fc_sequence(r, m, 4);
      for (int n = 0; n <= 4; ++n) {
        CheckRecord rec;
        rec.name = "bruteforce.r" + std::to_string(r) + ".m" +
                   std::to_string(m) + ".n" + std::to_string(n);
        rec.parameters = "r=" + std::to_string(r) + " m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
        rec.expected = series[n].get_str();
        try {
          rec.actual = fc_bruteforce(r, m, n, budget).get_str();
          rec.status = rec.actual == rec.expected ? CheckStatus::kPass
                                                  : CheckStatus::kFail;
        } catch (const BudgetExceeded&) {
          rec.actual = "-";
          rec.status = CheckStatus::kSkippedBudget;
        }
        out.push_back(std::move(rec));
      }
    }
  }
  // Single hyperedge: walks from each vertex versus circular Smirnov words.
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned m = 1; m <= 4; ++m) {
      CheckRecord rec;
      rec.name = "walks.star.r" + std::to_string(r) + ".m" + std::to_string(m);
      rec.parameters = "r=" + std::to_string(r) + " m=" + std::to_string(m);
      rec.expected = circular_smirnov_count(ContentVector(r + 1, m)).get_str();
      if (static_cast<long>(r + 1) * m > budget) {
        rec.actual = "-";
        rec.status = CheckStatus::kSkippedBudget;
      } else {
        Hypertree star = enumerate_hypertrees(r, 1).front();
        BigInt total = 0;
        for (const auto& a : vertex_walk_counts(star, m)) total += a;
        rec.actual = total.get_str();
        rec.status =
            rec.actual == rec.expected ? CheckStatus::kPass : CheckStatus::kFail;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

// Brute force over all arrangements of the multiset.
std::pair<BigInt, BigInt> CountWordsByPermutation(const ContentVector& content) {
  std::vector<unsigned> word;
  for (unsigned letter = 0; letter < content.size(); ++letter) {
    word.insert(word.end(), content[letter], letter);
  }
  BigInt linear = 0, circular = 0;
  do {
    bool ok = true;
    for (size_t i = 1; i < word.size() && ok; ++i) ok = word[i] != word[i - 1];
    if (!ok) continue;
    linear += 1;
    if (word.size() >= 2 && word.front() != word.back()) circular += 1;
  } while (std::next_permutation(word.begin(), word.end()));
  return {linear, circular};
}

void Compositions(unsigned total, ContentVector* cur,
                  std::vector<ContentVector>* out) {
  if (total == 0) {
    out->push_back(*cur);
    return;
  }
  for (unsigned part = 1; part <= total; ++part) {
    cur->push_back(part);
    Compositions(total - part, cur, out);
    cur->pop_back();
  }
}

Records SmirnovChecks() {
  Records out;
  std::vector<ContentVector> contents;
  for (unsigned total = 1; total <= 8; ++total) {
    ContentVector cur;
    Compositions(total, &cur, &contents);
  }
  size_t bad = 0;
  std::string first_bad = "-";
  for (const auto& c : contents) {
    auto [linear, circular] = CountWordsByPermutation(c);
    bool ok = linear == linear_smirnov_count(c);
    if (std::accumulate(c.begin(), c.end(), 0U) >= 2) {
      ok = ok && circular == circular_smirnov_count(c);
    }
    if (!ok && bad++ == 0) {
      first_bad.clear();
      for (unsigned x : c) first_bad += std::to_string(x) + ";";
    }
  }
  out.push_back({"smirnov.dp_vs_permutations",
                 std::to_string(contents.size()) + " contents, length<=8",
                 "0 mismatches",
                 std::to_string(bad) + " mismatches (first " + first_bad + ")",
                 bad == 0 ? CheckStatus::kPass : CheckStatus::kFail});
  for (unsigned r = 1; r <= 2; ++r) {
    for (unsigned m = 1; m <= 3; ++m) {
      out.push_back(Compare(
          "smirnov.gf_vs_dp.r" + std::to_string(r) + ".m" + std::to_string(m),
          "r=" + std::to_string(r) + " m=" + std::to_string(m),
          {circular_smirnov_count(ContentVector(r + 1, m)).get_str()},
          {circular_smirnov_gf_coefficient(r, m).get_str()}));
    }
  }
  return out;
}

Records LabelingRouteChecks() {
  Records out;
  for (unsigned r = 1; r <= 3; ++r) {
    for (unsigned m = 1; m <= 3; ++m) {
      out.push_back(Compare(
          "labeling.direct_vs_series.r" + std::to_string(r) + ".m" +
              std::to_string(m),
          "r=" + std::to_string(r) + " m=" + std::to_string(m) + " n=0..5",
          ToStrings(a_sequence(r, m, 5)),
          ToStrings(a_direct_sequence(r, m, 5))));
    }
  }
  return out;
}

// Every bijection round-trips and lands inside the independently enumerated
// target family.
std::string BijectionProblems(unsigned r, int n) {
  const auto dyck = enumerate_dyck_paths(r, n);
  const auto ballots = enumerate_ballot_sequences(r, n);
  const auto polygons = enumerate_polygon_divisions(r, n);
  std::set<std::string> dyck_set, ballot_set, ary_set, polygon_set;
  for (const auto& p : dyck) dyck_set.insert(p.Serialize());
  for (const auto& b : ballots) ballot_set.insert(b.Serialize());
  for (const auto& a : enumerate_ary_trees(r, n)) ary_set.insert(a.Serialize());
  for (const auto& p : polygons) polygon_set.insert(p.Serialize());
  std::set<std::string> seen_dyck, seen_ballot, seen_ary, seen_polygon;
  for (const auto& t : enumerate_plane_hypertrees(r, n)) {
    DyckPath d = tree_to_dyck(t, r);
    BallotSequence b = dyck_to_ballot(d, r);
    AryTree a = hypertree_to_ary(t, r);
    PolygonDivision p = ary_to_polygon(a, r);
    if (!(dyck_to_tree(d, r) == t)) return "tree->dyck does not invert";
    if (!(ballot_to_dyck(b, r) == d)) return "dyck->ballot does not invert";
    if (!(ary_to_hypertree(a, r) == t)) return "tree->ary does not invert";
    if (!(polygon_to_ary(p, r) == a)) return "ary->polygon does not invert";
    if (!dyck_set.count(d.Serialize())) return "dyck image outside family";
    if (!ballot_set.count(b.Serialize())) return "ballot image outside family";
    if (!ary_set.count(a.Serialize())) return "ary image outside family";
    if (!polygon_set.count(p.Serialize())) return "polygon image outside family";
    seen_dyck.insert(d.Serialize());
    seen_ballot.insert(b.Serialize());
    seen_ary.insert(a.Serialize());
    seen_polygon.insert(p.Serialize());
  }
  if (seen_dyck != dyck_set || seen_ballot != ballot_set ||
      seen_ary != ary_set || seen_polygon != polygon_set) {
    return "a bijection is not onto";
  }
  for (const auto& d : dyck) {
    if (!(tree_to_dyck(dyck_to_tree(d, r), r) == d)) return "dyck->tree does not invert";
  }
  for (const auto& p : polygons) {
    if (!(ary_to_polygon(polygon_to_ary(p, r), r) == p)) {
      return "polygon->ary does not invert";
    }
  }
  return "";
}

Records ObjectChecks() {
  Records out;
  for (unsigned r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 4; ++n) {
      const std::string suffix = ".r" + std::to_string(r) + ".n" + std::to_string(n);
      const std::string params = "r=" + std::to_string(r) + " n=" + std::to_string(n);
      const std::string expected = fuss_closed_form(r, n).get_str();
      for (Family f : kAllFamilies) {
        out.push_back(Compare("objects." + std::string(family_name(f)) + suffix,
                              params, {expected},
                              {std::to_string(enumerate(f, r, n).size())}));
      }
      std::string problem = BijectionProblems(r, n);
      out.push_back({"objects.bijections" + suffix, params, "round trips",
                     problem.empty() ? "round trips" : problem,
                     problem.empty() ? CheckStatus::kPass : CheckStatus::kFail});
    }
  }
  std::vector<std::string> counts;
  for (int n = 0; n <= 6; ++n) {
    counts.push_back(std::to_string(enumerate_hypertrees(1, n).size()));
  }
  out.push_back(Compare("hypertree.unlabeled_trees", "r=1 n=0..6",
                        {"1", "1", "1", "2", "3", "6", "11"}, counts));
  return out;
}

Records QuotedSequenceChecks() {
  Records out;
  for (const auto& row : reference::QuotedSequences()) {
    const auto values =
        fc_sequence(row.r, row.m, static_cast<int>(row.values.size()) - 1);
    for (size_t n = 0; n < row.values.size(); ++n) {
      CheckRecord rec;
      rec.name = "quoted.r" + std::to_string(row.r) + "m" +
                 std::to_string(row.m) + ".n" + std::to_string(n);
      rec.parameters = "r=" + std::to_string(row.r) +
                       " m=" + std::to_string(row.m) + " n=" + std::to_string(n);
      rec.expected = std::string(row.values[n]);
      rec.actual = values[n].get_str();
      rec.status = rec.expected == rec.actual ? CheckStatus::kPass
                                              : CheckStatus::kPaperDiscrepancy;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace

ValidationReport validate(int budget) {
  std::vector<std::future<Records>> jobs;
  auto spawn = [&](auto fn) {
    jobs.push_back(std::async(std::launch::async, fn));
  };
  spawn(Fc1Checks);
  spawn(LabelingChecks);
  spawn(ReductionChecks);
  spawn([budget] { return BruteforceChecks(budget); });
  spawn(SmirnovChecks);
  spawn(LabelingRouteChecks);
  spawn(ObjectChecks);
  spawn(QuotedSequenceChecks);
  ValidationReport report;
  for (auto& job : jobs) {
    Records part = job.get();
    report.records.insert(report.records.end(),
                          std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
  }
  std::sort(report.records.begin(), report.records.end(),
            [](const CheckRecord& a, const CheckRecord& b) {
              return a.name < b.name;
            });
  return report;
}

}  // namespace fusscat::cli
