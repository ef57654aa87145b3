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

#ifndef HURWITZ_LAMBERT_HPP
#define HURWITZ_LAMBERT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/laurent.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/special.hpp"
#include "hurwitz/unipoly.hpp"

// Series attached to the Lambert curve x = (1 - 1/t) e^{1/t - 1}.
// Unless stated otherwise a Laurent here is a series in u = 1/t, so a
// polynomial of degree d in t has valuation -d.

namespace hurwitz {

// t^2 (t - 1), the operator D = t^2(t-1) d/dt.
inline UniPoly lambert_d_factor() { return UniPoly{0, 0, -1, 1}; }

// hat xi_0 = t - 1, hat xi_{n+1} = t^2 (t-1) d/dt hat xi_n.
inline UniPoly xi_hat(int n) {
  if (n < 0) throw std::domain_error("xi_hat(n) is a polynomial only for n >= 0");
  UniPoly p{-1, 1};
  for (int k = 0; k < n; ++k) p = lambert_d_factor() * p.derivative();
  return p;
}

// hat xi_n as an exact series in 1/t, n >= -2. For n = -2 the additive
// constant is left out; every use differentiates it away.
inline Laurent xi_hat_laurent(int n) {
  if (n >= 0) return Laurent::from_poly_in_inverse(xi_hat(n));
  if (n == -1) return Laurent::exact(0, {Rational(1), Rational(-1)});
  if (n == -2) return Laurent::monomial(Rational(-1, 2), 2);
  throw std::domain_error("xi_hat defined for n >= -2");
}

// xi_0 = 1, xi_{n+1} = d/dt (t^2 (t-1) xi_n).
inline UniPoly xi_form(int n) {
  if (n < 0) throw std::domain_error("xi_form(n) needs n >= 0");
  UniPoly p{1};
  for (int k = 0; k < n; ++k) p = (lambert_d_factor() * p).derivative();
  return p;
}

// Cached hat xi_0..hat xi_{n_max} and xi_0..xi_{n_max}. Read-only once
// constructed.
class XiTower {
 public:
  explicit XiTower(int n_max) {
    hat_.push_back(UniPoly{-1, 1});
    form_.push_back(UniPoly{1});
    for (int k = 1; k <= n_max; ++k) {
      hat_.push_back(lambert_d_factor() * hat_.back().derivative());
      form_.push_back(hat_.back().derivative());
    }
  }
  int n_max() const { return static_cast<int>(hat_.size()) - 1; }
  const UniPoly& hat(int n) const { return hat_.at(n); }
  const UniPoly& form(int n) const { return form_.at(n); }

 private:
  std::vector<UniPoly> hat_, form_;
};

// w(t) = -1/t - log(1 - 1/t) = sum_{m>=2} u^m / m.
inline Laurent w_series(int order) {
  std::vector<Rational> c;
  for (int m = 2; m <= order; ++m) c.emplace_back(1, m);
  return Laurent(2, std::move(c), order);
}

namespace detail {

using Dense = std::vector<Rational>;  // power series mod u^{size}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

inline Dense dense_inverse(const Dense& a) {
  Dense b(a.size());
  b[0] = Rational(1) / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * b[0];
  }
  return b;
}

// sum_{m>=2} x^m / m for x of positive valuation.
inline Dense dense_w(const Dense& x) {
  Dense r(x.size()), p = dense_mul(x, x);
  for (std::size_t m = 2; m < x.size(); ++m) {
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] += p[i] / Rational(static_cast<long>(m));
    p = dense_mul(p, x);
  }
  return r;
}

}  // namespace detail

// The second root sigma = 1/s(t) of w(1/sigma) = w(t), as a series in u with
// valuation 1, known through u^order. Newton iteration seeded with
// s = -t + 2/3, then certified: the residual w(s) - w(t) is checked to vanish
// through the order that determines every computed coefficient.
inline Laurent inverse_involution(int order) {
  if (order < 1) throw std::domain_error("order must be positive");
  using detail::Dense;
  const std::size_t n = static_cast<std::size_t>(order) + 3;
  Dense u(n);
  u[1] = 1;
  const Dense wu = detail::dense_w(u);
  // sigma_0 = 1/(-t + 2/3) = -u / (1 - 2u/3)
  Dense sigma(n);
  {
    Dense den(n);
    den[0] = 1;
    den[1] = Rational(-2, 3);
    Dense inv = detail::dense_inverse(den);
    for (std::size_t i = 1; i < n; ++i) sigma[i] = -inv[i - 1];
  }
  for (std::size_t step = 0; (std::size_t{1} << step) <= 2 * n; ++step) {
    Dense f = detail::dense_w(sigma);
    for (std::size_t i = 0; i < n; ++i) f[i] -= wu[i];
    // sigma <- sigma - f (1 - sigma) / sigma
    Dense f_over_u(n), sigma_over_u(n), one_minus(n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      f_over_u[i] = f[i + 1];
      sigma_over_u[i] = sigma[i + 1];
    }
    for (std::size_t i = 0; i < n; ++i) one_minus[i] = -sigma[i];
    one_minus[0] += 1;
    Dense delta = detail::dense_mul(
        detail::dense_mul(f_over_u, detail::dense_inverse(sigma_over_u)),
        one_minus);
    for (std::size_t i = 0; i < n; ++i) sigma[i] -= delta[i];
  }
  Dense head(sigma.begin(), sigma.begin() + order + 1);
  Laurent result(0, head, order);
  // The coefficient of u^{k+1} in w(sigma) - w(u) determines sigma_k with
  // unit leading factor, so vanishing through u^{order+1} certifies sigma.
  Laurent residual = substitute(w_series(order + 1), result) -
                     w_series(order + 1);
  for (int d = 0; d <= std::min(order + 1, residual.trunc()); ++d)
    if (!residual.coeff(d).is_zero())
      throw std::logic_error("involution solve failed at order " +
                             std::to_string(d));
  if (residual.trunc() < order + 1)
    throw std::logic_error("involution residual under-determined");
  return result;
}

// s(t) with s(t) != t and w(s(t)) = w(t); a series in u of valuation -1,
// known through u^order.
inline Laurent s_involution(int order) {
  return reciprocal(inverse_involution(order + 2));
}

// v(t) with v^2/2 = w(t), v = 1/t + ...; known through u^order.
inline Laurent v_series(int order) {
  // v = u y with y^2 = sum_{m>=2} (2/m) u^{m-2}.
  const int n = order;  // y through u^{order-1}
  std::vector<Rational> f(n), y(n);
  for (int k = 0; k < n; ++k) f[k] = Rational(2, k + 2);
  if (n > 0) y[0] = 1;
  for (int k = 1; k < n; ++k) {
    Rational acc = f[k];
    for (int i = 1; i < k; ++i) acc -= y[i] * y[k - i];
    y[k] = acc / Rational(2);
  }
  return Laurent(1, std::move(y), order);
}

// Coefficients of the Stirling series Gamma(N+1) ~ sqrt(2 pi N)(N/e)^N sum_k
// s_k N^{-k}, from exp(-sum_r B_{2r}/(2r(2r-1)) y^{2r-1}).
inline std::vector<Rational> stirling_coefficients(int k_max) {
  std::vector<Rational> e(k_max + 1), s(k_max + 1);
  for (int r = 1; 2 * r - 1 <= k_max; ++r)
    e[2 * r - 1] = -bernoulli(2 * r) / Rational(2 * r * (2 * r - 1));
  s[0] = 1;
  for (int k = 1; k <= k_max; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) acc += Rational(j) * e[j] * s[k - j];
    s[k] = acc / Rational(k);
  }
  return s;
}

// eta_n(v) = (1/v) sum_k s_k (2(n-k)-1)!! v^{-2(n-k)}, n >= -1, as a series
// in v known through v^order.
inline Laurent eta(int n, int order) {
  if (n < -1) throw std::domain_error("eta(n) needs n >= -1");
  const int lo = -2 * n - 1;
  if (order < lo) return Laurent(lo, {}, order);
  const int k_max = (order - lo) / 2;
  const auto sk = stirling_coefficients(k_max);
  std::vector<Rational> c(order - lo + 1);
  for (int k = 0; k <= k_max; ++k)
    c[2 * k] = sk[k] * double_factorial(2 * (n - k) - 1);
  return Laurent(lo, std::move(c), order);
}

// The contribution of the unstable (0,2) term to the genus-one cut-and-join
// identity on the diagonal, (1/2)(S/6 + 1/12) where S is the Schwarzian of
// t as a function of w, written through phi = dt/dw = -t^2(t-1).
inline UniPoly h02_diagonal() {
  const UniPoly phi = -lambert_d_factor();
  UniPoly schwarz = phi * phi.derivative().derivative() -
                    Rational(1, 2) * (phi.derivative() * phi.derivative());
  return Rational(1, 12) * schwarz + UniPoly{Rational(1, 24)};
}

// t(x) = 1 + sum_{k>=1} k^k/k! x^k through x^order.
inline Laurent t_of_x(int order) {
  std::vector<Rational> c(order + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k)
    c[k] = pow(Rational(k), k) / Rational(mpq_class(factorial(k)));
  return Laurent(0, std::move(c), order);
}

// Checks sum_{mu1+mu2 >= 1} mu1^mu1 mu2^mu2 / (mu1! mu2! (mu1+mu2)) x1^mu1
// x2^mu2 = log(sum_k k^{k-1}/k! (x1^k - x2^k)/(x1 - x2)) through total
// degree order.
inline bool h02_series_identity_check(int order) {
  auto idx = [&](int i, int j) { return i * (order + 1) + j; };
  const std::size_t sz = static_cast<std::size_t>((order + 1) * (order + 1));
  auto kk = [](int k) {  // k^k / k!, with 0^0 = 1
    return k == 0 ? Rational(1)
                  : pow(Rational(k), k) / Rational(mpq_class(factorial(k)));
  };
  std::vector<Rational> lhs(sz);
  for (int a = 0; a <= order; ++a)
    for (int b = 0; a + b <= order; ++b)
      if (a + b > 0) lhs[idx(a, b)] = kk(a) * kk(b) / Rational(a + b);
  // y = sum_{k>=2} k^{k-1}/k! sum_{i+j=k-1} x1^i x2^j
  std::vector<Rational> y(sz);
  for (int k = 2; k <= order + 1; ++k) {
    Rational c = pow(Rational(k), k - 1) / Rational(mpq_class(factorial(k)));
    for (int i = 0; i <= k - 1; ++i) y[idx(i, k - 1 - i)] += c;
  }
  auto mul = [&](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    std::vector<Rational> r(sz);
    for (int a = 0; a <= order; ++a)
      for (int b = 0; a + b <= order; ++b) {
        if (p[idx(a, b)].is_zero()) continue;
        for (int c = 0; a + c <= order; ++c)
          for (int d = 0; a + b + c + d <= order; ++d)
            r[idx(a + c, b + d)] += p[idx(a, b)] * q[idx(c, d)];
      }
    return r;
  };
  // log(1 + y) = sum_m (-1)^{m+1} y^m / m
  std::vector<Rational> rhs(sz), p = y;
  for (int m = 1; m <= order; ++m) {
    Rational c(m % 2 ? 1 : -1, m);
    for (std::size_t i = 0; i < sz; ++i) rhs[i] += c * p[i];
    p = mul(p, y);
  }
  return lhs == rhs;
}

}  // namespace hurwitz

#endif  // HURWITZ_LAMBERT_HPP
