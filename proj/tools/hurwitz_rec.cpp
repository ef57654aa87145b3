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

// hurwitz-rec: linear Hodge integrals and simple Hurwitz numbers.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hurwitz/hodge.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/verify.hpp"

namespace fs = std::filesystem;
using namespace hurwitz;

namespace {

struct Globals {
  int budget = 9;
  int jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> v;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    std::istringstream ts(tok);
    std::string word;
    while (ts >> word) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size()) throw UsageError("malformed index list '" + s + "'");
      v.push_back(x);
    }
  }
  if (v.empty()) throw UsageError("empty index list");
  return v;
}

Method parse_method(const std::string& m) {
  if (m == "bm") return Method::bm;
  if (m == "cutjoin") return Method::cutjoin;
  return Method::both;
}

void check_budget(const Globals& gl, int g, int ell) {
  if (is_stable(g, ell) && euler_char(g, ell) > gl.budget)
    throw UsageError("complexity budget exceeded: 2g-2+ell=" +
                     std::to_string(euler_char(g, ell)) + " > " +
                     std::to_string(gl.budget));
}

// Fills the rectangle chi <= X, g + ell <= W covering the targets, going
// through the on-disk cache when HURWITZ_REC_CACHE names a directory.
HodgeTable provide_table(const std::vector<Cell>& targets, Method method,
                         const Globals& gl) {
  int chi = 1, weight = 2;
  for (const auto& c : targets) {
    chi = std::max(chi, c.chi());
    weight = std::max(weight, c.g + c.ell);
  }
  const char* dir = std::getenv("HURWITZ_REC_CACHE");
  fs::path file;
  if (dir && *dir) {
    file = fs::path(dir) / ("hodge-" + method_name(method) + "-chi" +
                            std::to_string(chi) + "-w" + std::to_string(weight) +
                            ".json");
    std::ifstream in(file);
    if (in) {
      try {
        HodgeTable t = hodge_table_from_json(json::parse(in));
        bool complete = true;
        for (const auto& c : dependency_closure(targets))
          complete = complete && t.has_cell(c.g, c.ell);
        if (complete) return t;
      } catch (const std::exception& e) {
        std::cerr << "warning: ignoring cache " << file << ": " << e.what() << "\n";
      }
    }
  }
  HodgeTable t = fill_to_complexity(chi, method, weight, FillOptions{gl.jobs});
  if (!file.empty()) {
    std::error_code ec;
    fs::create_directories(file.parent_path(), ec);
    std::ofstream out(file);
    if (out) out << to_json(t).dump() << "\n";
  }
  return t;
}

int run_hodge(int g, const std::string& indices, const std::string& format,
              const std::string& method, const std::string& export_path,
              const Globals& gl) {
  const std::vector<int> idx = parse_indices(indices);
  const int ell = static_cast<int>(idx.size());
  if (!is_stable(g, ell)) throw UsageError("unstable " + cell_name(g, ell));
  check_budget(gl, g, ell);
  const HodgeTable table = provide_table({{g, ell}}, parse_method(method), gl);
  const LambdaValue lv = hodge_lambda(table, g, idx);
  if (format == "json") {
    std::cout << json{{"g", g},
                      {"indices", idx},
                      {"lambda_j", lv.j},
                      {"value", lv.value.str()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "j=" << lv.j << " value=" << lv.value.str() << "\n";
  }
  if (!export_path.empty()) {
    std::ofstream out(export_path);
    if (!out) throw std::runtime_error("cannot write " + export_path);
    out << to_json(table).dump(1) << "\n";
  }
  return 0;
}

int run_hurwitz(int g, const std::string& mu_s, const std::string& method,
                const std::string& format, const Globals& gl) {
  if (g < 0) throw UsageError("genus must be non-negative");
  Partition mu;
  try {
    mu = Partition::parse(mu_s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool stable = is_stable(g, mu.length());
  auto via_elsv = [&] {
    if (!stable) return hurwitz_elsv(g, mu, HodgeTable::with_base_entries());
    check_budget(gl, g, mu.length());
    return hurwitz_elsv(g, mu, provide_table({{g, mu.length()}}, Method::cutjoin, gl));
  };
  Rational h;
  std::string note;
  bool checked = false;
  if (method == "elsv") {
    h = via_elsv();
  } else if (method == "cutjoin") {
    h = h_direct(g, mu);
  } else if (method == "brute") {
    h = h_brute(g, mu);
  } else {
    std::vector<std::pair<std::string, Rational>> got;
    got.emplace_back("cutjoin", h_direct(g, mu));
    if (!stable || euler_char(g, mu.length()) <= gl.budget)
      got.emplace_back("elsv", via_elsv());
    try {
      got.emplace_back("brute", h_brute(g, mu));
    } catch (const LimitExceeded&) {
    }
    for (const auto& [name, v] : got)
      if (v != got.front().second)
        throw IdentityViolation("methods disagree: cutjoin " +
                                got.front().second.str() + " vs " + name + " " +
                                v.str());
    h = got.front().second;
    checked = got.size() > 1;
    note = " (" + std::to_string(got.size()) + " methods agree)";
  }
  if (format == "json") {
    std::cout << to_json(HurwitzRow{g, mu, h, method, checked}).dump() << "\n";
  } else {
    std::cout << h.str() << note << "\n";
  }
  return 0;
}

int run_table(int g_max, int size_max, const std::string& out_path,
              const std::string& format, const std::string& method, bool check,
              bool include_zero, const Globals& gl) {
  if (g_max < 1 && !include_zero)
    throw UsageError("g-max must be ≥ 1 for the Hurwitz table");
  if (size_max < 1) throw UsageError("size-max must be ≥ 1");
  TableRequest req;
  req.g_min = include_zero ? 0 : 1;
  req.g_max = g_max;
  req.size_max = size_max;
  req.method = method == "elsv"    ? HurwitzMethod::elsv
               : method == "brute" ? HurwitzMethod::brute
                                   : HurwitzMethod::cutjoin;
  req.cross_check = check;
  req.complexity_budget = gl.budget;
  req.fill.jobs = gl.jobs;
  req.hodge_provider = [&](const std::vector<Cell>& cells) {
    return provide_table(cells, Method::cutjoin, gl);
  };
  const auto rows = table_generate(req);
  std::ostringstream os;
  if (format == "json")
    os << to_json(rows).dump(1) << "\n";
  else
    write_csv(os, rows);
  if (out_path.empty() || out_path == "-") {
    std::cout << os.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << os.str();
  }
  return 0;
}

int run_verify(const std::string& suite, int order, const Globals& gl) {
  std::vector<CheckResult> results;
  auto add = [&](std::vector<CheckResult> r) {
    results.insert(results.end(), r.begin(), r.end());
  };
  const FillOptions opt{gl.jobs};
  if (suite == "series" || suite == "all") add(verify_series(order));
  if (suite == "residues" || suite == "all")
    add(verify_residues(std::max(0, std::min(order / 3, 8))));
  if (suite == "dvv" || suite == "all")
    add(verify_dvv(std::min(gl.budget, 7), 6, opt));
  if (suite == "appendix" || suite == "all") add(verify_appendix(opt));
  const CheckResult* first_fail = nullptr;
  for (const auto& r : results) {
    std::cout << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.ok && !r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    if (!r.ok && !first_fail) first_fail = &r;
  }
  if (first_fail) {
    std::cerr << "error: identity failed: " << first_fail->name << "\n";
    return 1;
  }
  std::cout << results.size() << " checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear Hodge integrals and simple Hurwitz numbers"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--complexity-budget", gl.budget,
                 "largest 2g-2+ell filled on demand")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", gl.jobs, "cells solved concurrently per level")
      ->check(CLI::PositiveNumber);

  int g = 0;
  std::string indices, format = "text", method = "cutjoin", export_path;
  auto* hodge = app.add_subcommand("hodge", "one linear Hodge integral");
  hodge->add_option("--g", g, "genus")->required();
  hodge->add_option("--indices", indices, "psi exponents, e.g. 2,3")->required();
  hodge->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  hodge->add_option("--method", method)->check(CLI::IsMember({"bm", "cutjoin", "both"}));
  hodge->add_option("--export", export_path, "write the filled table as JSON");

  std::string mu, hmethod = "elsv";
  auto* hur = app.add_subcommand("hurwitz", "one simple Hurwitz number");
  hur->add_option("--g", g, "genus")->required();
  hur->add_option("--mu", mu, "ramification profile, e.g. 2,1")->required();
  hur->add_option("--method", hmethod)
      ->check(CLI::IsMember({"elsv", "cutjoin", "brute", "cross"}));
  hur->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  int g_max = 1, size_max = 1;
  std::string out_path, tformat = "csv", tmethod = "cutjoin";
  bool check = false, include_zero = false;
  auto* table = app.add_subcommand("table", "a block of Hurwitz numbers");
  table->add_option("--g-max", g_max)->required();
  table->add_option("--size-max", size_max)->required();
  table->add_option("--out", out_path, "output file (default stdout)");
  table->add_option("--format", tformat)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--method", tmethod)
      ->check(CLI::IsMember({"elsv", "cutjoin", "brute"}));
  table->add_flag("--check", check, "cross-check every row");
  table->add_flag("--include-genus-zero", include_zero);

  std::string suite = "all";
  int order = 20;
  auto* ver = app.add_subcommand("verify", "run identity checks");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"appendix", "dvv", "series", "residues", "all"}));
  ver->add_option("--order", order, "series order")->check(CLI::Range(4, 60));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (*hodge) return run_hodge(g, indices, format, method, export_path, gl);
    if (*hur) return run_hurwitz(g, mu, hmethod, format, gl);
    if (*table)
      return run_table(g_max, size_max, out_path, tformat, tmethod, check,
                       include_zero, gl);
    return run_verify(suite, order, gl);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
