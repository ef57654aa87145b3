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


#include <gtest/gtest.h>

#include <numeric>

#include "hurwitz/hodge.hpp"
#include "hurwitz/io.hpp"

using namespace hurwitz;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

Rational fact(int n) {
  Rational r(1);
  for (int k = 2; k <= n; ++k) r *= R(k);
  return r;
}

const HodgeTable& table5() {
  static const HodgeTable t = fill_to_complexity(5, Method::cutjoin);
  return t;
}

// Stable cells of the table whose entries are all known.
std::vector<std::vector<int>> weight_tuples(int ell, int w) {
  std::vector<std::vector<int>> out;
  for (auto& n : ordered_tuples(ell, w))
    if (std::accumulate(n.begin(), n.end(), 0) == w) out.push_back(n);
  return out;
}

}  // namespace

TEST(Extraction, SyntheticIdentity) {
  XiTower x(3);
  std::vector<XiUnknown> unknowns;
  for (int n = 0; n <= 2; ++n)
    unknowns.push_back({{n}, MultiPoly::from_uni(x.hat(n), 0, 1),
                        {Exponents{2 * n + 1}}});
  MultiPoly rhs = MultiPoly::from_uni(
      R(5) * x.hat(0) - R(2, 3) * x.hat(1) + R(7) * x.hat(2), 0, 1);
  auto out = extract_in_xi_basis(rhs, unknowns);
  EXPECT_EQ(out.at({0}), R(5));
  EXPECT_EQ(out.at({1}), R(-2, 3));
  EXPECT_EQ(out.at({2}), R(7));
  // a monomial outside the span is reported
  rhs.add_term({2}, 1);
  EXPECT_THROW(extract_in_xi_basis(rhs, unknowns), IdentityViolation);
}

TEST(Table, BaseEntriesAndLookups) {
  const HodgeTable t = HodgeTable::with_base_entries();
  EXPECT_EQ(t.get(0, {0, 0, 0}), R(1));
  EXPECT_EQ(t.get(1, {1}), R(1, 24));
  EXPECT_EQ(t.get(1, {0}), R(-1, 24));
  EXPECT_EQ(t.get(1, {2}), R(0));
  EXPECT_THROW(t.get(0, {0, 0}), std::domain_error);
  EXPECT_THROW(t.get(2, {1}), MissingEntry);
}

TEST(Table, GenusOneBaseRederived) {
  const HodgeTable cj = fill_cells({{1, 1}}, Method::cutjoin);
  EXPECT_EQ(cj.get(1, {1}), R(1, 24));
  EXPECT_EQ(cj.get(1, {0}), R(-1, 24));
  HodgeSolver s;
  s.prepare({{1, 1}}, Method::cutjoin);
  auto vals = s.solve_cutjoin(HodgeTable::with_base_entries(), 1, 1);
  EXPECT_EQ(vals.at({1}), R(1, 24));
  EXPECT_EQ(vals.at({0}), R(-1, 24));
}

TEST(Table, GenusZeroMultinomials) {
  // Lambda^vee is 1 in genus zero: <tau_n>_{0,l} = (l-3)!/prod n_i!
  const HodgeTable& t = table5();
  for (int ell = 3; ell <= 7; ++ell)
    for (const auto& n : weight_tuples(ell, ell - 3)) {
      Rational want = fact(ell - 3);
      for (int x : n) want /= fact(x);
      EXPECT_EQ(t.get(0, n), want) << key_name(0, n);
    }
  EXPECT_EQ(t.get(0, {0, 0, 0, 0}), R(0));
  EXPECT_EQ(t.get(0, {0, 0, 0, 0, 1}), R(0));
}

TEST(Table, PurePsiOnePoint) {
  const HodgeTable& t = table5();
  for (int g = 1; g <= 3; ++g) {
    Rational want = R(1) / fact(g);
    for (int k = 0; k < g; ++k) want /= R(24);
    EXPECT_EQ(psi_integral(t, g, {3 * g - 2}), want) << g;
  }
}

TEST(Table, TopLambdaFormula) {
  // <tau_k lambda_g>_{g,l} = (2g-3+l)!/prod k_i! * b_g with
  // b_g = (2^{2g-1}-1)|B_{2g}| / (2^{2g-1} (2g)!)
  const Rational bern[] = {R(1, 6), R(1, 30), R(1, 42)};
  const HodgeTable& t = table5();
  for (int g = 1; g <= 3; ++g) {
    Rational p(1);
    for (int k = 0; k < 2 * g - 1; ++k) p *= R(2);
    const Rational b = (p - R(1)) * bern[g - 1] / (p * fact(2 * g));
    for (int ell = 1; euler_char(g, ell) <= 5; ++ell)
      for (const auto& n : weight_tuples(ell, 2 * g - 3 + ell)) {
        Rational want = fact(2 * g - 3 + ell) * b;
        for (int x : n) want /= fact(x);
        const LambdaValue lv = hodge_lambda(t, g, n);
        EXPECT_EQ(lv.j, g);
        EXPECT_EQ(lv.value, want) << key_name(g, n);
      }
  }
}

TEST(Table, StringAndDilaton) {
  const HodgeTable& t = table5();
  for (const auto& c : t.cells()) {
    if (euler_char(c.g, c.ell + 1) > 5) continue;
    for (auto& n : ordered_tuples(c.ell, moduli_dim(c.g, c.ell))) {
      // <tau_0 tau_n> = sum_i <tau_{n_i - 1} ...>
      std::vector<int> with0 = n;
      with0.push_back(0);
      Rational s;
      for (int i = 0; i < c.ell; ++i) {
        std::vector<int> m = n;
        --m[i];
        s += t.get(c.g, m);
      }
      EXPECT_EQ(t.get(c.g, with0), s) << key_name(c.g, with0);
      // <tau_1 tau_n> = (2g-2+l) <tau_n>
      std::vector<int> with1 = n;
      with1.push_back(1);
      EXPECT_EQ(t.get(c.g, with1), R(c.chi()) * t.get(c.g, n)) << key_name(c.g, with1);
    }
  }
}

TEST(Table, LambdaLookups) {
  const HodgeTable& t = table5();
  LambdaValue lv = hodge_lambda(t, 2, {3});
  EXPECT_EQ(lv.j, 1);
  EXPECT_EQ(lv.value, R(1, 480));
  lv = hodge_lambda(t, 2, {2, 2});
  EXPECT_EQ(lv.j, 1);
  EXPECT_EQ(lv.value, R(5, 576));
  lv = hodge_lambda(t, 2, {4});
  EXPECT_EQ(lv.j, 0);
  EXPECT_EQ(lv.value, R(1, 1152));
  lv = hodge_lambda(t, 2, {2});
  EXPECT_EQ(lv.j, 2);
  EXPECT_EQ(lv.value, R(7, 5760));
  // beyond the dimension, or a lambda class above the genus
  EXPECT_EQ(hodge_lambda(t, 2, {5}).value, R(0));
  EXPECT_EQ(hodge_lambda(t, 2, {0}).value, R(0));
  EXPECT_THROW(hodge_lambda(t, 0, {1, 1}), std::domain_error);
  EXPECT_THROW(hodge_lambda(t, 2, {-1}), std::domain_error);
}

TEST(Pipelines, AgreeThroughComplexityFive) {
  const HodgeTable bm = fill_to_complexity(5, Method::bm);
  EXPECT_EQ(bm.entries(), table5().entries());
  EXPECT_EQ(bm.cells(), table5().cells());
  EXPECT_NO_THROW(fill_to_complexity(4, Method::both, {}, FillOptions{3}));
}

TEST(Pipelines, ClosureOfATarget) {
  const auto cells = dependency_closure({{2, 2}});
  std::set<Cell> got(cells.begin(), cells.end());
  const std::set<Cell> want{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  EXPECT_EQ(got, want);
  for (std::size_t k = 1; k < cells.size(); ++k)
    EXPECT_LE(cells[k - 1].chi(), cells[k].chi());
  EXPECT_THROW(dependency_closure({{0, 2}}), std::domain_error);
}

TEST(Pipelines, ParallelFillMatchesSerial) {
  const HodgeTable par = fill_to_complexity(5, Method::cutjoin, {}, FillOptions{4});
  EXPECT_EQ(par.entries(), table5().entries());
}

TEST(Dvv, HoldsOnEveryLevel) {
  const HodgeTable& t = table5();
  for (const auto& c : t.cells()) EXPECT_TRUE(dvv_verify(t, c.g, c.ell - 1)) << cell_name(c.g, c.ell);
}

TEST(Dvv, DetectsACorruptedEntry) {
  HodgeTable t = table5();
  t.put(1, {2, 1, 0}, t.get(1, {2, 1, 0}) + R(1));
  EXPECT_FALSE(dvv_verify(t, 1, 2));
}

TEST(Io, JsonRoundTrip) {
  const json j = to_json(table5());
  const HodgeTable back = hodge_table_from_json(j);
  EXPECT_EQ(back.entries(), table5().entries());
  EXPECT_EQ(back.cells(), table5().cells());
  bool seen = false;
  for (const auto& r : j)
    if (r["g"] == 2 && r["indices"] == std::vector<int>{3}) {
      EXPECT_EQ(r["lambda_j"], 1);
      EXPECT_EQ(r["value"], "1/480");
      seen = true;
    }
  EXPECT_TRUE(seen);
  json bad = j;
  for (auto& r : bad)
    if (r["g"] == 1 && r["indices"] == std::vector<int>{1}) r["value"] = "1/12";
  EXPECT_THROW(hodge_table_from_json(bad), std::runtime_error);
}
