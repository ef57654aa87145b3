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

#include "hurwitz/lambert.hpp"
#include "hurwitz/special.hpp"

using namespace hurwitz;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

// Truncated power series helpers, kept separate from the library's series
// code so that they can serve as a reference.
using Ps = std::vector<Rational>;

Ps ps_mul(const Ps& a, const Ps& b) {
  Ps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// f(g) for g with zero constant term.
Ps ps_compose(const Ps& f, const Ps& g) {
  Ps r(g.size()), p(g.size());
  p[0] = 1;
  for (std::size_t k = 0; k < f.size(); ++k) {
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += f[k] * p[i];
    p = ps_mul(p, g);
  }
  return r;
}

// v(u) from v^2 = 2 sum_{m>=2} u^m/m by undetermined coefficients.
Ps v_of_u(int n) {
  Ps w(n + 2);
  for (int m = 2; m <= n + 1; ++m) w[m] = R(2, m);
  Ps v(n + 1);
  v[1] = 1;
  for (int k = 2; k <= n; ++k) {
    // coefficient of u^{k+1} in v^2 is 2 v_k + (terms with lower indices)
    Rational acc;
    for (int i = 2; i < k; ++i) acc += v[i] * v[k + 1 - i];
    v[k] = (w[k + 1] - acc) / R(2);
  }
  return v;
}

// Compositional inverse of a series x + a_2 x^2 + ...
Ps reverse(const Ps& f) {
  Ps g(f.size());
  g[1] = 1;
  for (std::size_t k = 2; k < f.size(); ++k) {
    Ps c = ps_compose(f, g);
    g[k] = -c[k];
  }
  return g;
}

}  // namespace

TEST(Xi, FirstPolynomials) {
  EXPECT_EQ(xi_hat(0), (UniPoly{-1, 1}));
  EXPECT_EQ(xi_hat(1), (UniPoly{0, 0, -1, 1}));
  EXPECT_EQ(xi_hat(2), (UniPoly{0, 0, 0, 2, -5, 3}));
  EXPECT_EQ(xi_form(0), (UniPoly{1}));
  EXPECT_EQ(xi_form(1), (UniPoly{0, -2, 3}));
}

TEST(Xi, DegreeLeadingCoefficientAndRoot) {
  XiTower tower(10);
  for (int n = 0; n <= 10; ++n) {
    const UniPoly& p = tower.hat(n);
    EXPECT_EQ(p.degree(), 2 * n + 1);
    EXPECT_EQ(p.coeff(2 * n + 1), double_factorial(2 * n - 1));
    EXPECT_EQ(p(R(1)), R(0));
    EXPECT_EQ(tower.form(n), p.derivative());
    EXPECT_EQ(p, xi_hat(n));
    EXPECT_EQ(tower.form(n), xi_form(n));
    if (n >= 1) EXPECT_EQ(p.valuation(), n + 1);
  }
}

TEST(Xi, NegativeIndicesFollowTheOperator) {
  // D(1 - 1/t) = t^2 (t - 1) / t^2 = t - 1
  const Laurent d = Laurent::from_poly_in_inverse(lambert_d_factor());
  EXPECT_EQ(d * xi_hat_laurent(-1).derivative() * R(-1) * Laurent::monomial(1, 2),
            xi_hat_laurent(0))
      << "derivative in u carries a factor -u^2";
  EXPECT_EQ(d * xi_hat_laurent(-2).derivative() * R(-1) * Laurent::monomial(1, 2),
            xi_hat_laurent(-1));
}

TEST(Xi, LaplaceTransformOfPowers) {
  const int order = 10;
  Ps tx(order + 1);
  tx[0] = 1;
  for (int k = 1; k <= order; ++k)
    tx[k] = pow(R(k), k) / Rational(mpq_class(factorial(k)));
  for (int n = 0; n <= 5; ++n) {
    // evaluate the polynomial at t(x) by Horner
    const UniPoly p = xi_hat(n);
    Ps acc(order + 1);
    for (int k = p.degree(); k >= 0; --k) {
      acc = ps_mul(acc, tx);
      acc[0] += p.coeff(k);
    }
    for (int k = 1; k <= order; ++k)
      EXPECT_EQ(acc[k], pow(R(k), k + n) / Rational(mpq_class(factorial(k))))
          << "n=" << n << " k=" << k;
    EXPECT_EQ(acc[0], R(0));
  }
}

TEST(Curve, InvolutionCoefficients) {
  const Laurent s = s_involution(12);
  EXPECT_EQ(s.valuation(), -1);
  EXPECT_EQ(s.coeff(-1), R(-1));
  EXPECT_EQ(s.coeff(0), R(2, 3));
  EXPECT_EQ(s.coeff(1), R(0));
  EXPECT_EQ(s.coeff(2), R(4, 135));
  EXPECT_EQ(s.coeff(3), R(8, 405));
  EXPECT_EQ(s.coeff(4), R(8, 567));
  EXPECT_GE(s.trunc(), 12);
}

TEST(Curve, InvolutionProperties) {
  const int order = 16;
  const Laurent sigma = inverse_involution(order + 4);
  const Laurent s = s_involution(order + 2);
  // s(s(t)) = t
  const Laurent ss = substitute(s, sigma);
  for (int d = -1; d <= order; ++d)
    EXPECT_EQ(ss.coeff(d), d == -1 ? R(1) : R(0)) << d;
  // w(s) = w(t), computed with the reference helpers in 1/s
  Ps sig(order + 1);
  for (int d = 1; d <= order; ++d) sig[d] = sigma.coeff(d);
  Ps w(order + 1);
  for (int m = 2; m <= order; ++m) w[m] = R(1, m);
  const Ps ws = ps_compose(w, sig);
  for (int d = 0; d <= order; ++d) EXPECT_EQ(ws[d], w[d]) << d;
}

TEST(Curve, AiryCoordinate) {
  const Laurent v = v_series(14);
  const Ps ref = v_of_u(14);
  for (int d = 1; d <= 14; ++d) EXPECT_EQ(v.coeff(d), ref[d]) << d;
  EXPECT_EQ(v.coeff(1), R(1));
  EXPECT_EQ(v.coeff(2), R(1, 3));
  EXPECT_EQ(v.coeff(3), R(7, 36));
  EXPECT_EQ(v.coeff(4), R(73, 540));
  EXPECT_EQ(v.coeff(5), R(1331, 12960));
  // v(s(t)) = -v(t)
  const Laurent vs = substitute(v, inverse_involution(16));
  for (int d = 1; d <= 14; ++d) EXPECT_EQ(vs.coeff(d), -v.coeff(d)) << d;
}

TEST(Stirling, CoefficientsFromExponential) {
  const auto sk = stirling_coefficients(6);
  EXPECT_EQ(sk[0], R(1));
  EXPECT_EQ(sk[1], R(-1, 12));
  EXPECT_EQ(sk[2], R(1, 288));
  EXPECT_EQ(sk[3], R(139, 51840));
  EXPECT_EQ(sk[4], R(-571, 2488320));
  // exp(f) through its power series, with Bernoulli numbers written out
  const Rational b[] = {R(1, 6), R(-1, 30), R(1, 42)};
  Ps f(7);
  for (int r = 1; r <= 3; ++r) f[2 * r - 1] = -b[r - 1] / R(2 * r * (2 * r - 1));
  Ps e(7), p(7);
  p[0] = 1;
  Rational fact(1);
  for (int m = 0; m <= 6; ++m) {
    if (m) fact *= R(m);
    for (int i = 0; i <= 6; ++i) e[i] += p[i] / fact;
    p = ps_mul(p, f);
  }
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(sk[k], e[k]) << k;
}

TEST(Eta, MinusOneBySeriesReversion) {
  // eta_{-1} = (hat xi_{-1}(t) - hat xi_{-1}(s))/2 = -(odd part of u(v))
  const int n = 11;
  const Ps u = reverse(v_of_u(n));
  const Laurent e = eta(-1, n);
  for (int d = 1; d <= n; ++d)
    EXPECT_EQ(e.coeff(d), d % 2 ? -u[d] : R(0)) << d;
  EXPECT_EQ(e.coeff(1), R(-1));
  EXPECT_EQ(e.coeff(3), R(-1, 36));
  EXPECT_EQ(e.coeff(5), R(-1, 4320));
}

TEST(Eta, OddnessAndRecursion) {
  for (int n = -1; n <= 5; ++n) {
    const Laurent e = eta(n, 12);
    EXPECT_EQ(e.valuation(), -2 * n - 1);
    for (int d = e.valuation(); d <= 12; ++d)
      if (d % 2 == 0) EXPECT_EQ(e.coeff(d), R(0));
    // eta_{n+1} = -(1/v) d/dv eta_n
    const Laurent next = e.derivative().shifted(-1) * R(-1);
    const Laurent want = eta(n + 1, 10);
    for (int d = want.valuation(); d <= 10; ++d)
      EXPECT_EQ(next.coeff(d), want.coeff(d)) << "n=" << n << " d=" << d;
  }
}

TEST(Eta, MatchesAntiInvariantPartOfXi) {
  // hat xi_n(1/u(v)) has anti-invariant part eta_n(v) under v -> -v, with u(v)
  // from the reference reversion.
  const int order = 12;
  for (int n = 0; n <= 4; ++n) {
    const int hi = order + 2 * n + 2;
    const Ps u = reverse(v_of_u(hi + 1));
    std::vector<Rational> uc(u.begin() + 1, u.end());
    const Laurent useries(1, uc, hi + 1);
    const Laurent t = reciprocal(useries);
    const Laurent x = substitute(xi_hat(n), t);
    const Laurent e = eta(n, order);
    for (int d = -2 * n - 1; d <= order; ++d)
      EXPECT_EQ(d % 2 ? x.coeff(d) : R(0), e.coeff(d)) << "n=" << n << " d=" << d;
  }
}

TEST(H02, LogarithmIdentityAndDiagonal) {
  EXPECT_TRUE(h02_series_identity_check(9));
  EXPECT_EQ(h02_diagonal(), (UniPoly{R(1, 24), 0, 0, R(-1, 6), R(1, 8)}));
  // (1/2) sum_{a+b=d} ab H_0(a,b) with H_0(a,b) = a^a b^b/(a! b! (a+b))
  const int order = 8;
  Ps tx(order + 1);
  tx[0] = 1;
  for (int k = 1; k <= order; ++k)
    tx[k] = pow(R(k), k) / Rational(mpq_class(factorial(k)));
  const UniPoly p = h02_diagonal();
  Ps acc(order + 1);
  for (int k = p.degree(); k >= 0; --k) {
    acc = ps_mul(acc, tx);
    acc[0] += p.coeff(k);
  }
  for (int d = 2; d <= order; ++d) {
    Rational want;
    for (int a = 1; a < d; ++a) {
      const int b = d - a;
      want += R(a * b, 2) * pow(R(a), a) * pow(R(b), b) /
              Rational(mpq_class(factorial(a) * factorial(b))) / R(d);
    }
    EXPECT_EQ(acc[d], want) << d;
  }
}
