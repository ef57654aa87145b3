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

#include "hurwitz/residue.hpp"
#include "hurwitz/special.hpp"

using namespace hurwitz;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

ResidueKernel& kernel() {
  static ResidueKernel k;
  return k;
}

}  // namespace

TEST(Residue, LowestPolynomial) {
  const UniPoly p = kernel().p_ab(0, 0);
  EXPECT_EQ(p, (UniPoly{0, R(8, 135), R(1, 9), R(-2, 3), R(1, 2)}));
}

TEST(Residue, TwoFormsAgreeForPairs) {
  for (int s = 0; s <= 5; ++s)
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      const UniPoly d = kernel().p_ab(a, b);
      EXPECT_EQ(d, kernel().p_ab_eta(a, b, 2 * s + 12)) << a << "," << b;
      EXPECT_EQ(d, kernel().p_ab(b, a));
      EXPECT_EQ(d.degree(), 2 * (a + b + 2));
      // leading terms: eta_{k} ~ (2k-1)!! v^{-2k-1}, eta_{-1} ~ -v, v ~ 1/t
      EXPECT_EQ(d.coeff(d.degree()),
                double_factorial(2 * a + 1) * double_factorial(2 * b + 1) / R(2));
      // the residue never produces a constant term
      EXPECT_EQ(d.coeff(0), R(0));
    }
}

TEST(Residue, TwoFormsAgreeForSingles) {
  for (int n = 0; n <= 4; ++n) {
    const MultiPoly d = kernel().p_n(n);
    EXPECT_EQ(d, kernel().p_n_eta(n, 2 * n + 10)) << n;
    EXPECT_EQ(d.degree_in(0), 2 * n + 2);
    EXPECT_EQ(d.degree_in(1), 2 * n + 2);
  }
}

TEST(Residue, SumCapDoesNotMatter) {
  for (int n = 0; n <= 3; ++n)
    EXPECT_EQ(kernel().p_n_eta(n, 2 * n + 10, n + 2),
              kernel().p_n_eta(n, 2 * n + 22, n + 6));
}

TEST(Residue, HigherTruncationChangesNothing) {
  EXPECT_EQ(kernel().p_ab_at(1, 2, 18), kernel().p_ab_at(1, 2, 30));
  EXPECT_EQ(kernel().p_n_at(2, 12), kernel().p_n_at(2, 24));
}

TEST(Residue, TooLowTruncationIsReported) {
  EXPECT_THROW(kernel().p_ab_at(3, 3, 2), TruncationError);
}

TEST(Residue, InputErrors) {
  EXPECT_THROW(kernel().p_ab(-1, 0), std::domain_error);
  EXPECT_THROW(kernel().p_n(-1), std::domain_error);
}

TEST(Residue, CacheLookups) {
  ResidueCache c;
  c.prepare(2, 1);
  EXPECT_EQ(c.p_ab(0, 2), kernel().p_ab(0, 2));
  EXPECT_EQ(c.p_ab(2, 0), kernel().p_ab(2, 0));
  EXPECT_EQ(c.p_n(1), kernel().p_n(1));
  EXPECT_THROW(c.p_ab(2, 1), std::out_of_range);
  EXPECT_THROW(c.p_n(2), std::out_of_range);
}
