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

#ifndef HURWITZ_IO_HPP
#define HURWITZ_IO_HPP

#include <json.hpp>

#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/hodge.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/unipoly.hpp"

// JSON and CSV forms. Rationals are always strings "n" or "num/den".

namespace hurwitz {

using nlohmann::json;

inline json to_json(const UniPoly& p) {
  json j = json::object();
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) j[std::to_string(k)] = p.coeff(k).str();
  return j;
}

// Rows {"g","indices","lambda_j","value"} with value = <tau_indices lambda_j>,
// ordered by genus, number of points, then indices.
inline json to_json(const HodgeTable& table) {
  json rows = json::array();
  for (const auto& [k, v] : table.entries()) {
    const int j = moduli_dim(k.g, k.ell()) - k.weight();
    const Rational signed_v = j % 2 ? -v : v;
    rows.push_back({{"g", k.g},
                    {"indices", k.indices},
                    {"lambda_j", j},
                    {"value", signed_v.str()}});
  }
  return rows;
}

// Inverse of to_json. A cell counts as filled when any of its entries is
// present; the base cells must carry their exact values.
inline HodgeTable hodge_table_from_json(const json& rows) {
  HodgeTable t = HodgeTable::with_base_entries();
  const HodgeTable base = t;
  std::map<Cell, std::map<std::vector<int>, Rational>> cells;
  for (const auto& r : rows) {
    const int g = r.at("g").get<int>();
    std::vector<int> idx = r.at("indices").get<std::vector<int>>();
    const int j = r.at("lambda_j").get<int>();
    const int ell = static_cast<int>(idx.size());
    if (!is_stable(g, ell)) throw std::invalid_argument("unstable row in table");
    int w = 0;
    for (int x : idx) w += x;
    if (j != moduli_dim(g, ell) - w) throw std::invalid_argument("inconsistent lambda_j");
    Rational v = Rational::parse(r.at("value").get<std::string>());
    if (j % 2) v = -v;
    std::sort(idx.begin(), idx.end(), std::greater<>());
    cells[{g, ell}][idx] = v;
  }
  for (const auto& [c, vals] : cells) {
    if (base.has_cell(c.g, c.ell)) {
      if (vals != base.cell_values(c))
        throw std::runtime_error("cached table fails base-entry revalidation");
      continue;
    }
    t.put_cell(c, vals);
  }
  return t;
}

inline json to_json(const HurwitzRow& r) {
  return {{"g", r.g},
          {"mu", r.mu.parts()},
          {"h", r.h.str()},
          {"method", r.method},
          {"checked", r.checked}};
}

inline json to_json(const std::vector<HurwitzRow>& rows) {
  json j = json::array();
  for (const auto& r : rows) j.push_back(to_json(r));
  return j;
}

inline void write_csv(std::ostream& os, const std::vector<HurwitzRow>& rows) {
  os << "g,mu,h,method,checked\n";
  for (const auto& r : rows)
    os << r.g << ",\"" << r.mu.str() << "\"," << r.h.str() << "," << r.method
       << "," << (r.checked ? "true" : "false") << "\n";
}

}  // namespace hurwitz

#endif  // HURWITZ_IO_HPP
