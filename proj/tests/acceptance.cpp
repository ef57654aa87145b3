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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <chrono>
#include <functional>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "hurwitz/hodge.hpp"
#include "hurwitz/hurwitz.hpp"
#include "hurwitz/lambert.hpp"
#include "hurwitz/reference_tables.hpp"
#include "hurwitz/residue.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

int failures = 0;

void report(int n, const std::string& title,
            const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title
            << " [" << detail.str() << "; " << std::fixed;
  std::cout.precision(1);
  std::cout << secs << "s]" << std::endl;
}

std::string join(const std::vector<Rational>& v, std::size_t n) {
  std::string s;
  for (std::size_t k = 0; k < n && k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s;
}

const FillOptions kFill{4};

// The chi <= 6 table, shared by the remainder and DVV checks.
std::optional<HodgeTable> level6;

}  // namespace

int main() {
  report(1, "linear Hodge integral table via both pipelines", [](auto& out) {
    std::vector<Cell> targets;
    for (const auto& e : reference::linear_hodge_integrals())
      targets.push_back({e.g, static_cast<int>(e.indices.size())});
    const HodgeTable bm = fill_cells(targets, Method::bm, kFill);
    const HodgeTable cj = fill_cells(targets, Method::cutjoin, kFill);
    int good = 0, total = 0;
    for (const auto& e : reference::linear_hodge_integrals()) {
      ++total;
      const Rational want = Rational::parse(e.value);
      bool ok = true;
      for (const HodgeTable* t : {&bm, &cj}) {
        const LambdaValue lv = hodge_lambda(*t, e.g, e.indices);
        ok = ok && lv.j == e.j && lv.value == want;
      }
      if (ok) ++good;
      else out << "mismatch " << key_name(e.g, e.indices) << "; ";
    }
    out << good << "/" << total << " entries";
    return good == total;
  });

  report(2, "Hurwitz number table via ELSV and cut-and-join", [](auto& out) {
    std::vector<Cell> cells;
    for (const auto& e : reference::hurwitz_numbers())
      if (is_stable(e.g, static_cast<int>(e.mu.size())))
        cells.push_back({e.g, static_cast<int>(e.mu.size())});
    const HodgeTable t = fill_cells(cells, Method::cutjoin, kFill);
    CutJoin cj;
    int good = 0, total = 0;
    for (const auto& e : reference::hurwitz_numbers()) {
      ++total;
      const Partition mu(e.mu);
      const Rational want = Rational::parse(e.h);
      if (hurwitz_elsv(e.g, mu, t) == want && cj.hurwitz(e.g, mu) == want) ++good;
      else out << "mismatch g=" << e.g << " (" << mu.str() << "); ";
    }
    out << good << "/" << total << " cells";
    return good == total;
  });

  report(3, "brute force equals cut-and-join for |mu| <= 5, r <= 8", [](auto& out) {
    CutJoin cj;
    int good = 0, total = 0;
    for (int d = 1; d <= 5; ++d)
      for (const auto& mu : partitions_of(d))
        for (int g = 0; branch_points(g, mu) <= 8; ++g) {
          ++total;
          if (h_brute(g, mu) == cj.hurwitz(g, mu)) ++good;
          else out << "mismatch g=" << g << " (" << mu.str() << "); ";
        }
    out << good << "/" << total << " keys";
    return good == total && total > 0;
  });

  report(4, "residue polynomials agree in both forms", [](auto& out) {
    ResidueKernel k;
    int good = 0, total = 0;
    for (int s = 0; s <= 8; ++s)
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        ++total;
        const UniPoly d = k.p_ab(a, b);
        if (d == k.p_ab_eta(a, b, 2 * s + 12) && d.degree() == 2 * (a + b + 2)) ++good;
        else out << "P_{" << a << "," << b << "} differs; ";
      }
    for (int n = 0; n <= 6; ++n) {
      ++total;
      const MultiPoly d = k.p_n(n);
      if (d == k.p_n_eta(n, 2 * n + 10) && d.degree_in(0) == 2 * n + 2 &&
          d.degree_in(1) == 2 * n + 2)
        ++good;
      else out << "P_" << n << " differs; ";
    }
    out << good << "/" << total << " polynomials";
    return good == total;
  });

  report(5, "series identities at order 30", [](auto& out) {
    const auto res = verify_series(30);
    int good = 0;
    for (const auto& r : res) {
      if (r.ok) ++good;
      else out << r.name << " (" << r.detail << "); ";
    }
    const Laurent s = s_involution(8), v = v_series(8);
    std::vector<Rational> sc, vc;
    for (int d = -1; d <= 4; ++d)
      if (!s.coeff(d).is_zero()) sc.push_back(s.coeff(d));
    for (int d = 1; d <= 5; ++d) vc.push_back(v.coeff(d));
    const auto sk = stirling_coefficients(4);
    const bool printed =
        sc == std::vector<Rational>{-1, Rational(2, 3), Rational(4, 135),
                                    Rational(8, 405), Rational(8, 567)} &&
        vc == std::vector<Rational>{1, Rational(1, 3), Rational(7, 36),
                                    Rational(73, 540), Rational(1331, 12960)} &&
        sk == std::vector<Rational>{1, Rational(-1, 12), Rational(1, 288),
                                    Rational(139, 51840), Rational(-571, 2488320)};
    out << good << "/" << res.size() << " identities; s: " << join(sc, 5)
        << "; v: " << join(vc, 5) << "; s_k: " << join(sk, 5);
    return good == static_cast<int>(res.size()) && printed;
  });

  report(6, "zero remainder and symmetry at every level chi <= 6", [](auto& out) {
    // fill raises on a nonzero remainder, a dimension violation or an
    // asymmetric coefficient; both pipelines must then agree
    const HodgeTable& t = level6.emplace(fill_to_complexity(6, Method::both, {}, kFill));
    std::set<int> levels;
    for (const auto& c : t.cells()) levels.insert(c.chi());
    out << t.cells().size() << " cells on " << levels.size() << " levels, "
        << t.entries().size() << " entries";
    return levels.size() == 6 && t.cells().size() == 18;
  });

  report(7, "DVV recursion and base values", [](auto& out) {
    if (!level6) level6 = fill_to_complexity(6, Method::cutjoin, {}, kFill);
    const HodgeTable& t = *level6;
    int good = 0, total = 0;
    for (const auto& c : t.cells()) {
      if (c.g > 3) continue;
      ++total;
      if (dvv_verify(t, c.g, c.ell - 1)) ++good;
      else out << "DVV fails at " << cell_name(c.g, c.ell) << "; ";
    }
    const bool base = psi_integral(t, 0, {0, 0, 0}) == Rational(1) &&
                      psi_integral(t, 1, {1}) == Rational(1, 24);
    const UniPoly w11 = t.get(1, {1}) * xi_form(1) + t.get(1, {0}) * xi_form(0);
    const UniPoly want = Rational(1, 24) * UniPoly{-1, 1} * UniPoly{1, 3};
    out << good << "/" << total << " levels; W_{1,1} = " << w11.str();
    return good == total && base && w11 == want;
  });

  report(8, "(0,2) series identity and ELSV inversion", [](auto& out) {
    const bool series = h02_series_identity_check(8);
    const HodgeTable t = fill_to_complexity(4, Method::cutjoin, {}, kFill);
    int good = 0, total = 0;
    for (const auto& c : t.cells()) {
      ++total;
      if (elsv_invert(c.g, c.ell) == t.cell_values(c)) ++good;
      else out << "inversion differs at " << cell_name(c.g, c.ell) << "; ";
    }
    out << "series through degree 8 " << (series ? "ok" : "fails") << "; "
        << good << "/" << total << " cells inverted";
    return series && good == total;
  });

  return failures ? 1 : 0;
}
