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

#ifndef HURWITZ_RESIDUE_HPP
#define HURWITZ_RESIDUE_HPP

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/lambert.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/multipoly.hpp"
#include "hurwitz/unipoly.hpp"

namespace hurwitz {

// Series in u = 1/t derived from s(t), all known through a common order.
class CurveSeries {
 public:
  explicit CurveSeries(int order)
      : order_(order),
        s_(s_involution(order)),
        sigma_(inverse_involution(order + 2)) {
    const Laurent t = Laurent::monomial(1, -1);
    kernel_ = t * s_ * reciprocal(t - s_);
    ds_dt_ = -(s_.derivative().shifted(2));
    // 1/(t^2 (t-1)) = u^3 / (1 - u)
    std::vector<Rational> geo(order + 2, Rational(1));
    inv_d_factor_ = Laurent(3, std::move(geo), order + 4);
    s_powers_.push_back(Laurent::monomial(1, 0));
  }

  int order() const { return order_; }
  const Laurent& s() const { return s_; }
  const Laurent& sigma() const { return sigma_; }
  // t s / (t - s)
  const Laurent& kernel() const { return kernel_; }
  const Laurent& ds_dt() const { return ds_dt_; }
  const Laurent& inv_d_factor() const { return inv_d_factor_; }

  // p(s(t)).
  Laurent at_s(const UniPoly& p) {
    while (static_cast<int>(s_powers_.size()) <= p.degree())
      s_powers_.push_back(s_powers_.back() * s_);
    Laurent acc(0, {}, Laurent::kExact);
    for (int k = 0; k <= p.degree(); ++k)
      if (!p.coeff(k).is_zero()) acc += s_powers_[k] * p.coeff(k);
    return acc;
  }

 private:
  int order_;
  Laurent s_, sigma_, kernel_, ds_dt_, inv_d_factor_;
  std::vector<Laurent> s_powers_;
};

// Series in u attached to v(t), known through a common order.
class VSeries {
 public:
  explicit VSeries(int order)
      : order_(order), v_(v_series(order)) {
    dv_dt_ = -(v_.derivative().shifted(2));
  }
  int order() const { return order_; }
  const Laurent& v() const { return v_; }
  const Laurent& dv_dt() const { return dv_dt_; }
  // f(v(t)) for f a series in v.
  Laurent at_v(const Laurent& f) const { return substitute(f, v_); }

 private:
  int order_;
  Laurent v_, dv_dt_;
};

class ResidueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The residue polynomials P_{a,b}(t) and P_n(t, t_i). P_n is returned as a
// polynomial in two variables (t, t_i).
class ResidueKernel {
 public:
  UniPoly p_ab_at(int a, int b, int order) {
    check_ab(a, b);
    CurveSeries& c = curve(order);
    const Laurent xa = xi_hat_laurent(a + 1), xb = xi_hat_laurent(b + 1);
    const Laurent sym = xa * c.at_s(xi_hat(b + 1)) + xb * c.at_s(xi_hat(a + 1));
    Laurent r = c.kernel() * c.inv_d_factor() * sym * Rational(1, 2);
    return polynomial_part(r);
  }

  // Computed at two truncation orders that must agree.
  UniPoly p_ab(int a, int b) {
    const int d = 2 * (a + b + 2);
    UniPoly lo = p_ab_at(a, b, d + 6), hi = p_ab_at(a, b, d + 12);
    if (!(lo == hi))
      throw ResidueError("truncation guard failed for P_{" +
                         std::to_string(a) + "," + std::to_string(b) + "}");
    return lo;
  }

  UniPoly p_ab_eta(int a, int b, int order) {
    check_ab(a, b);
    const Laurent e = eta(a + 1, order) * eta(b + 1, order) *
                      reciprocal(eta(-1, order)) *
                      Laurent::monomial(Rational(1, 2), 1);
    VSeries& vs = vseries(order);
    return polynomial_part(vs.at_v(e) * vs.dv_dt());
  }

  MultiPoly p_n_at(int n, int order) {
    if (n < 0) throw std::domain_error("P_n needs n >= 0");
    CurveSeries& c = curve(order);
    const Laurent a = c.kernel() * xi_hat_laurent(n + 1) * c.ds_dt();
    const Laurent b = c.kernel() * c.at_s(xi_hat(n + 1));
    const int cap = 2 * n + 3;
    MultiPoly acc(2);
    Laurent sig_pow = c.sigma();
    for (int k = 0; k <= cap + 2; ++k) {
      const UniPoly row = polynomial_part(a * sig_pow + b.shifted(k + 1));
      if (k > cap) {
        if (!row.is_zero())
          throw ResidueError("t_i-degree cap exceeded in P_" +
                             std::to_string(n));
      } else if (k > 0) {
        for (int d = 0; d <= row.degree(); ++d)
          acc.add_term({d, k - 1}, row.coeff(d) * Rational(k));
      }
      sig_pow = sig_pow * c.sigma();
    }
    return acc;
  }

  MultiPoly p_n(int n) {
    const int d = 2 * n + 2;
    MultiPoly lo = p_n_at(n, d + 6), hi = p_n_at(n, d + 12);
    if (!(lo == hi))
      throw ResidueError("truncation guard failed for P_" + std::to_string(n));
    return lo;
  }

  // m_max < 0 selects the natural cap n + 2.
  MultiPoly p_n_eta(int n, int order, int m_max = -1) {
    if (n < 0) throw std::domain_error("P_n needs n >= 0");
    if (m_max < 0) m_max = n + 2;
    VSeries& vs = vseries(order);
    const Laurent inv_eta = reciprocal(eta(-1, order));
    const Laurent en = eta(n + 1, order);
    MultiPoly acc(2);
    for (int m = 0; m <= m_max; ++m) {
      const UniPoly a = polynomial_part(
          vs.at_v(en * Laurent::monomial(1, 2 * m))).derivative();
      const UniPoly b = polynomial_part(
          vs.at_v(inv_eta * Laurent::monomial(1, -2 * m - 1)) * vs.dv_dt());
      for (int i = 0; i <= b.degree(); ++i)
        for (int j = 0; j <= a.degree(); ++j)
          acc.add_term({i, j}, b.coeff(i) * a.coeff(j));
    }
    return acc;
  }

 private:
  static void check_ab(int a, int b) {
    if (a < 0 || b < 0) throw std::domain_error("P_{a,b} needs a, b >= 0");
  }
  CurveSeries& curve(int order) {
    auto it = curves_.find(order);
    if (it == curves_.end())
      it = curves_.emplace(order, std::make_unique<CurveSeries>(order)).first;
    return *it->second;
  }
  VSeries& vseries(int order) {
    auto it = vs_.find(order);
    if (it == vs_.end())
      it = vs_.emplace(order, std::make_unique<VSeries>(order)).first;
    return *it->second;
  }

  std::map<int, std::unique_ptr<CurveSeries>> curves_;
  std::map<int, std::unique_ptr<VSeries>> vs_;
};

// Precomputed residue polynomials. prepare() is the only writer; lookups
// after it are read-only and safe to share between threads.
class ResidueCache {
 public:
  void prepare(int max_ab_sum, int max_n) {
    for (int s = 0; s <= max_ab_sum; ++s)
      for (int a = 0; a <= s; ++a)
        if (!pab_.count({a, s - a})) {
          if (a <= s - a)
            pab_[{a, s - a}] = kernel_.p_ab(a, s - a);
          else
            pab_[{a, s - a}] = pab_.at({s - a, a});
        }
    for (int n = 0; n <= max_n; ++n)
      if (!pn_.count(n)) pn_.emplace(n, kernel_.p_n(n));
  }
  const UniPoly& p_ab(int a, int b) const {
    auto it = pab_.find({a, b});
    if (it == pab_.end())
      throw std::out_of_range("P_{" + std::to_string(a) + "," +
                              std::to_string(b) + "} not prepared");
    return it->second;
  }
  const MultiPoly& p_n(int n) const {
    auto it = pn_.find(n);
    if (it == pn_.end())
      throw std::out_of_range("P_" + std::to_string(n) + " not prepared");
    return it->second;
  }

 private:
  ResidueKernel kernel_;
  std::map<std::pair<int, int>, UniPoly> pab_;
  std::map<int, MultiPoly> pn_;
};

}  // namespace hurwitz

#endif  // HURWITZ_RESIDUE_HPP
