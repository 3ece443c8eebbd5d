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

#include <string_view>
#include <vector>

namespace fusscat::reference {

// Published tables, transcribed verbatim as decimal strings. Entries above
// 2^53 in several rows carry double-precision rounding, and the r = 2 FC_1
// row skips one term after m = 17; validation treats those tails as known
// discrepancies rather than failures.

struct Row {
  unsigned r;
  unsigned m;  // 0 for rows indexed by m
  std::vector<std::string_view> values;
};

// FC_1^(r,m), indexed by m starting at 0.
inline const std::vector<Row>& Fc1Rows() {
  static const std::vector<Row> rows = {
      {2, 0, {"1", "1", "4", "22", "134", "866", "5812", "40048", "281374",
              "2006698", "14482064", "105527060", "775113440", "5731756720",
              "42628923040", "318621793472", "2391808860446", "18023208400634",
              "1033449449559724", "7858699302115444", "59906766929537120",
              "457685157123172672"}},
      {3, 0, {"1", "1", "31", "1415", "75843", "4446741", "276154969",
              "17851418019", "1188572791275", "80953196003777",
              "5613704715433131", "395005886411621632", "28132373164175540224",
              "2024078159788958023680", "146898874444939943477248"}},
      {4, 0, {"1", "1", "293", "140343", "83002866", "55279816356",
              "39738077935264", "30129436868588072", "23760203412845559808",
              "19312059423860889485312", "16076955055099988982890496"}},
      {5, 0, {"1", "1", "3326", "20167651", "158861646466", "1450728060971387",
              "14571371516350429184", "156418475586202988707840",
              "1763546149118396438551724032",
              "249071711627865231410775840362856448"}},
      {6, 0, {"1", "1", "44189", "3980871156", "490294453324924",
              "72078730629785796608", "11876790400066162977144832"}},
      {7, 0, {"1", "1", "673471", "1035707510307", "2292204611710893056",
              "6235048155225092628938752", "19372051918038658908241101062144",
              "66048441479612871465789854936547196928"}},
      {8, 0, {"1", "1", "11588884", "343866839138005",
              "15459367618357013512192", "879601407931825671736009949184",
              "58256941603805586085506513167594815488"}},
  };
  return rows;
}

// |A_{mn}^(r)|, indexed by n starting at 0.
inline const std::vector<Row>& LabelingRows() {
  static const std::vector<Row> rows = {
      {2, 2, {"1", "1", "9", "126", "2151", "41175", "850176", "18542034",
              "421860879", "9934669359", "240959223765", "6000574953384",
              "153165781146996", "4005089138936340", "107341301939872140"}},
      {2, 3, {"1", "1", "30", "1740", "141400", "14680200", "1906159200",
              "313012812000", "66433831920000", "18438349698120000",
              "6629124634968000000", "3011746300705961280000",
              "1681721795997004320000000", "1127233507688231983249600000"}},
      {3, 2, {"1", "1", "12", "222", "4956", "122985", "3267324", "91059444",
              "2629956924", "78098264100", "2371811147640", "73388998683990",
              "2307381601052628", "73568992192119918"}},
      {3, 3, {"1", "1", "40", "2920", "284000", "33507600", "4662841600",
              "769261248000", "154597443264000", "39233217384400000",
              "12873892988852800000", "5441807779916104960000",
              "2889966803748531046400000", "1871989337366944472934400000"}},
  };
  return rows;
}

// FC_n^(r), n = 0..9 (m = 1).
inline const std::vector<Row>& FussRows() {
  static const std::vector<Row> rows = {
      {1, 1, {"1", "1", "2", "5", "14", "42", "132", "429", "1430"}},
      {2, 1, {"1", "1", "3", "12", "55", "273", "1428", "7752", "43263",
              "246675"}},
      {3, 1, {"1", "1", "4", "22", "140", "969", "7084", "53820", "420732",
              "3362260"}},
      {4, 1, {"1", "1", "5", "35", "285", "2530", "23751", "231880",
              "2330445", "23950355"}},
  };
  return rows;
}

// Hypergraph Catalan numbers C_n^(2), n = 0..4.
inline const Row& HypergraphCatalanRow() {
  static const Row row = {1, 2, {"1", "1", "6", "57", "678"}};
  return row;
}

// FC_n^(r,m) example sequences quoted alongside the definition. They do not
// agree with FC_1^n |A_n|; validation reports each disagreeing entry.
inline const std::vector<Row>& QuotedSequences() {
  static const std::vector<Row> rows = {
      {2, 2, {"1", "1", "144", "1341648", "693520980336"}},
      {2, 3, {"1", "1", "480", "200225", "18527520", "45589896150400"}},
      {3, 2, {"1", "1", "11532", "628958939250",
              "163980917165716725552156"}},
      {3, 3, {"1", "1", "38440", "8272793255000",
              "9396808005460764741084000"}},
  };
  return rows;
}

}  // namespace fusscat::reference
