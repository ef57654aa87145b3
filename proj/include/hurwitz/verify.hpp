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

#ifndef HURWITZ_VERIFY_HPP
#define HURWITZ_VERIFY_HPP

#include <algorithm>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/hodge.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/lambert.hpp"
#include "hurwitz/reference_tables.hpp"
#include "hurwitz/residue.hpp"

// Self-check suites behind `hurwitz-rec verify`.

namespace hurwitz {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

namespace detail {

inline CheckResult run_check(const std::string& name,
                             const std::function<bool(std::string&)>& f) {
  CheckResult r{name, false, ""};
  try {
    r.ok = f(r.detail);
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = e.what();
  }
  return r;
}

// Known coefficients agree and both sides are determined through order.
inline bool same_through(const Laurent& a, const Laurent& b, int order,
                         std::string& why) {
  if (a.trunc() < order || b.trunc() < order) {
    why = "determined only through order " + std::to_string(std::min(a.trunc(), b.trunc()));
    return false;
  }
  for (int d = std::min(a.valuation(), b.valuation()); d <= order; ++d)
    if (a.coeff(d) != b.coeff(d)) {
      why = "coefficient of degree " + std::to_string(d) + " differs";
      return false;
    }
  return true;
}

}  // namespace detail

inline std::vector<CheckResult> verify_series(int order) {
  std::vector<CheckResult> out;
  const Laurent s = s_involution(order + 4);
  const Laurent sigma = inverse_involution(order + 6);
  const Laurent t = Laurent::monomial(1, -1);
  out.push_back(detail::run_check("s(s(t)) = t", [&](std::string& why) {
    return detail::same_through(substitute(s, sigma), t, order, why);
  }));
  out.push_back(detail::run_check("w(s(t)) = w(t)", [&](std::string& why) {
    return detail::same_through(substitute(w_series(order + 2), sigma),
                                w_series(order + 2), order, why);
  }));
  const Laurent v = v_series(order + 2);
  out.push_back(detail::run_check("v^2/2 = w", [&](std::string& why) {
    return detail::same_through(v * v * Rational(1, 2), w_series(order + 2),
                                order, why);
  }));
  out.push_back(detail::run_check("v(s(t)) = -v(t)", [&](std::string& why) {
    return detail::same_through(substitute(v, sigma), -v, order, why);
  }));
  for (int n = -1; n <= 8; ++n)
    out.push_back(detail::run_check(
        "eta_" + std::to_string(n) + "(v) = (hat xi_n(t) - hat xi_n(s))/2",
        [&, n](std::string& why) {
          const int hi = order + 2 * n + 4;
          CurveSeries c(hi);
          const Laurent at_s =
              n >= 0 ? c.at_s(xi_hat(n)) : substitute(xi_hat_laurent(n), c.sigma());
          const Laurent lhs = (xi_hat_laurent(n) - at_s) * Rational(1, 2);
          const Laurent rhs = substitute(eta(n, hi), v_series(hi));
          return detail::same_through(lhs, rhs, order, why);
        }));
  const int xo = std::min(order, 12);
  out.push_back(detail::run_check("(0,2) Laplace transform identity",
                                  [&](std::string&) {
                                    return h02_series_identity_check(xo);
                                  }));
  out.push_back(detail::run_check("hat xi_n(t(x)) = sum k^{k+n}/k! x^k",
                                  [&](std::string& why) {
    const Laurent tx = t_of_x(xo);
    for (int n = 0; n <= 6; ++n) {
      const Laurent lhs = substitute(xi_hat(n), tx);
      std::vector<Rational> c(xo + 1);
      for (int k = 1; k <= xo; ++k)
        c[k] = pow(Rational(k), k + n) / Rational(mpq_class(factorial(k)));
      if (!detail::same_through(lhs, Laurent(0, c, xo), xo, why)) {
        why = "n=" + std::to_string(n) + ": " + why;
        return false;
      }
    }
    return true;
  }));
  out.push_back(detail::run_check("(0,2) diagonal term from x-series",
                                  [&](std::string& why) {
    // (1/2) sum alpha beta H_0(alpha, beta) x^{alpha+beta}
    const int xo2 = std::min(order, 10);
    std::vector<Rational> c(xo2 + 1);
    for (int a = 1; a < xo2; ++a)
      for (int b = 1; a + b <= xo2; ++b) {
        Partition mu({a, b});
        c[a + b] += Rational(a * b, 2) * *unstable_normalized(0, mu);
      }
    return detail::same_through(substitute(h02_diagonal(), t_of_x(xo2)),
                                Laurent(0, c, xo2), xo2, why);
  }));
  return out;
}

inline std::vector<CheckResult> verify_residues(int max_sum) {
  std::vector<CheckResult> out;
  ResidueKernel k;
  for (int s = 0; s <= max_sum; ++s)
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      out.push_back(detail::run_check(
          "P_{" + std::to_string(a) + "," + std::to_string(b) + "} two forms",
          [&, a, b](std::string& why) {
            const UniPoly d = k.p_ab(a, b);
            const UniPoly e = k.p_ab_eta(a, b, 2 * (a + b + 2) + 8);
            if (d.degree() != 2 * (a + b + 2)) {
              why = "degree " + std::to_string(d.degree());
              return false;
            }
            return d == e;
          }));
    }
  for (int n = 0; n <= max_sum; ++n)
    out.push_back(detail::run_check("P_" + std::to_string(n) + " two forms",
                                    [&, n](std::string& why) {
      const MultiPoly d = k.p_n(n);
      const MultiPoly e = k.p_n_eta(n, 2 * n + 10);
      const MultiPoly f = k.p_n_eta(n, 2 * n + 10, n + 4);
      if (d.degree_in(0) != 2 * n + 2 || d.degree_in(1) != 2 * n + 2) {
        why = "wrong bidegree";
        return false;
      }
      if (!(e == f)) {
        why = "eta form depends on the sum cap";
        return false;
      }
      return d == e;
    }));
  return out;
}

inline std::vector<CheckResult> verify_dvv(int chi_max, int weight_cap,
                                           const FillOptions& opt = {}) {
  std::vector<CheckResult> out;
  HodgeTable table = fill_to_complexity(chi_max, Method::cutjoin, weight_cap, opt);
  for (const auto& c : table.cells())
    out.push_back(detail::run_check(
        "DVV at " + cell_name(c.g, c.ell),
        [&, c](std::string&) { return dvv_verify(table, c.g, c.ell - 1); }));
  return out;
}

inline std::vector<CheckResult> verify_appendix(const FillOptions& opt = {}) {
  std::vector<CheckResult> out;
  std::vector<Cell> targets;
  for (const auto& e : reference::linear_hodge_integrals())
    targets.push_back({e.g, static_cast<int>(e.indices.size())});
  HodgeTable bm, cj;
  out.push_back(detail::run_check("residue pipeline fill", [&](std::string&) {
    bm = fill_cells(targets, Method::bm, opt);
    return true;
  }));
  out.push_back(detail::run_check("cut-and-join pipeline fill", [&](std::string&) {
    cj = fill_cells(targets, Method::cutjoin, opt);
    return true;
  }));
  out.push_back(detail::run_check("pipelines agree entry by entry", [&](std::string&) {
    return bm.entries() == cj.entries();
  }));
  for (const auto& e : reference::linear_hodge_integrals())
    out.push_back(detail::run_check(
        key_name(e.g, e.indices) + " lambda_" + std::to_string(e.j) + " = " +
            std::string(e.value),
        [&](std::string& why) {
          const Rational want = Rational::parse(e.value);
          for (const HodgeTable* t : {&bm, &cj}) {
            const LambdaValue lv = hodge_lambda(*t, e.g, e.indices);
            if (lv.j != e.j || lv.value != want) {
              why = "got j=" + std::to_string(lv.j) + " value " + lv.value.str();
              return false;
            }
          }
          return true;
        }));
  CutJoin cjh;
  for (const auto& e : reference::hurwitz_numbers()) {
    Partition mu(e.mu);
    out.push_back(detail::run_check(
        "h_{" + std::to_string(e.g) + ",(" + mu.str() + ")} = " + std::string(e.h),
        [&, mu](std::string& why) {
          const Rational want = Rational::parse(e.h);
          const Rational direct = cjh.hurwitz(e.g, mu);
          if (direct != want) {
            why = "cut-and-join gives " + direct.str();
            return false;
          }
          if (cj.has_cell(e.g, mu.length()) || !is_stable(e.g, mu.length())) {
            const Rational viaelsv = hurwitz_elsv(e.g, mu, cj);
            if (viaelsv != want) {
              why = "ELSV gives " + viaelsv.str();
              return false;
            }
          }
          return true;
        }));
  }
  out.push_back(detail::run_check("base cells re-derived by ELSV inversion",
                                  [](std::string&) { return verify_base_cases(); }));
  return out;
}

}  // namespace hurwitz

#endif  // HURWITZ_VERIFY_HPP
