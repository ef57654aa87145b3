// Copyright 2026 The hurwitz-rec Authors
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

#ifndef HURWITZ_REFERENCE_TABLES_HPP
#define HURWITZ_REFERENCE_TABLES_HPP

#include <array>
#include <string_view>
#include <vector>

// Reference values used by `verify --suite appendix` and the tests.

namespace hurwitz::reference {

struct LinearHodge {
  int g;
  std::vector<int> indices;
  int j;
  std::string_view value;  // <tau_indices lambda_j>_g
};

inline const std::vector<LinearHodge>& linear_hodge_integrals() {
  static const std::vector<LinearHodge> t = {
      {2, {3}, 1, "1/480"},
      {2, {2, 2}, 1, "5/576"},
      {3, {6}, 1, "7/138240"},
      {3, {5}, 2, "41/580608"},
      {3, {5, 2}, 1, "323/483840"},
      {3, {4, 2}, 2, "2329/2903040"},
      {3, {4, 3}, 1, "19/17920"},
      {3, {3, 3}, 2, "1501/1451520"},
      {3, {4, 2, 2}, 1, "541/60480"},
      // tau_3 appears twice here; a third copy would exceed the dimension
      {3, {3, 3, 2}, 1, "89/7680"},
      {3, {3, 2, 2}, 2, "859/96768"},
      {3, {3, 2, 2, 2}, 1, "395/3456"},
      {3, {2, 2, 2, 2}, 2, "17/192"},
      {4, {9}, 1, "1/1244160"},
      {4, {8}, 2, "1357/696729600"},
      {4, {7}, 3, "13/6220800"},
      {4, {8, 2}, 1, "841/38707200"},
      {4, {7, 2}, 2, "33391/696729600"},
      {4, {5, 3}, 3, "2609/29030400"},
      {4, {7, 3}, 1, "221/4147200"},
      {4, {6, 3}, 2, "1153/11059200"},
      {4, {4, 4}, 3, "6421/58060800"},
      {4, {6, 4}, 1, "517/5806080"},
      {4, {5, 4}, 2, "979/6451200"},
      {4, {5, 5}, 1, "1223/11612160"},
      {4, {6, 2}, 3, "5477/116121600"},
      {4, {7, 2, 2}, 1, "3487/5806080"},
      {4, {4, 4, 3}, 1, "137/46080"},
      {4, {4, 3, 3}, 2, "58951/16588800"},
      {4, {6, 3, 2}, 1, "50243/38707200"},
      {4, {6, 2, 2}, 2, "137843/116121600"},
      {4, {5, 2, 2}, 3, "241/230400"},
      {4, {5, 4, 2}, 1, "2597/1382400"},
      {4, {5, 3, 2}, 2, "577/258048"},
      {4, {4, 3, 2}, 3, "27821/16588800"},
      {4, {5, 3, 3}, 1, "3359/1382400"},
      {4, {4, 4, 2}, 2, "2657/967680"},
      {4, {3, 3, 3}, 3, "4531/2073600"},
      {5, {12}, 1, "1/106168320"},
      {5, {10}, 3, "71/1114767360"},
      {5, {11}, 2, "577/16721510400"},
      {5, {9}, 4, "21481/367873228800"},
  };
  return t;
}

struct HurwitzEntry {
  int g;
  std::vector<int> mu;
  std::string_view h;
};

// Populated cells of the genus 1..4 table plus the genus 5 one-part list.
inline const std::vector<HurwitzEntry>& hurwitz_numbers() {
  static const std::vector<HurwitzEntry> t = [] {
    struct Row {
      std::vector<int> mu;
      std::array<std::string_view, 4> h;
    };
    const std::vector<Row> rows = {
        {{1}, {"0", "0", "0", "0"}},
        {{2}, {"1/2", "1/2", "1/2", "1/2"}},
        {{1, 1}, {"1/2", "1/2", "1/2", "1/2"}},
        {{3}, {"9", "81", "729", "6561"}},
        {{2, 1}, {"40", "364", "3280", "29524"}},
        {{1, 1, 1}, {"40", "364", "3280", "29524"}},
        {{4}, {"160", "5824", "209920", "7558144"}},
        {{3, 1}, {"1215", "45927", "1673055", "60407127"}},
        {{2, 2}, {"480", "17472", "629760", "22674432"}},
        {{2, 1, 1}, {"5460", "206640", "7528620", "271831560"}},
        {{1, 1, 1, 1}, {"5460", "206640", "7528620", ""}},
        {{5}, {"3125", "328125", "33203125", "3330078125"}},
        {{4, 1}, {"35840", "3956736", "409108480", "41394569216"}},
        {{3, 2}, {"26460", "2748816", "277118820", "27762350616"}},
        {{3, 1, 1}, {"234360", "26184060", "2719617120", "275661886500"}},
        {{2, 2, 1}, {"188160", "20160000", "2059960320", "207505858560"}},
        {{2, 1, 1, 1}, {"1189440", "131670000", "13626893280", ""}},
        {{1, 1, 1, 1, 1}, {"1189440", "131670000", "", ""}},
        {{6}, {"68040", "16901136", "3931876080", "895132294056"}},
        {{5, 1}, {"1093750", "287109375", "68750000000", "15885009765625"}},
        {{4, 2}, {"788480", "192783360", "44490434560", "10093234511360"}},
        {{4, 1, 1}, {"9838080", "2638056960", "638265788160", "148222087453440"}},
        {{3, 3}, {"357210", "86113125", "19797948720", "4487187539835"}},
        {{3, 2, 1}, {"14696640", "3710765520", "872470478880", "199914163328880"}},
        {{3, 1, 1, 1}, {"65998800", "17634743280", "4259736280800", ""}},
        {{2, 2, 2}, {"2016000", "486541440", "111644332800", "25269270586560"}},
        {{2, 2, 1, 1}, {"80438400", "20589085440", "4874762692800", ""}},
        {{2, 1, 1, 1, 1}, {"382536000", "100557737280", "", ""}},
        {{1, 1, 1, 1, 1, 1}, {"382536000", "", "", ""}},
    };
    std::vector<HurwitzEntry> out;
    for (int g = 1; g <= 4; ++g)
      for (const auto& r : rows)
        if (!r.h[g - 1].empty()) out.push_back({g, r.mu, r.h[g - 1]});
    const std::array<std::string_view, 6> g5 = {
        "0", "1/2", "59049", "272097280", "333251953125", "202252053177720"};
    for (int d = 1; d <= 6; ++d) out.push_back({5, {d}, g5[d - 1]});
    return out;
  }();
  return t;
}

}  // namespace hurwitz::reference

#endif  // HURWITZ_REFERENCE_TABLES_HPP
