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

#ifndef HURWITZ_HURWITZ_HPP
#define HURWITZ_HURWITZ_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hurwitz/hodge.hpp"
#include "hurwitz/rational.hpp"

// Simple Hurwitz numbers h_{g,mu}: connected covers of P^1 with profile mu
// over infinity and simple ramification elsewhere, weighted by 1/|Aut|.

namespace hurwitz {

// Parts sorted non-increasingly.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
    for (int x : p_)
      if (x < 1) throw std::invalid_argument("partition parts must be positive");
    std::sort(p_.begin(), p_.end(), std::greater<>());
  }
  // "3,2,1" or "3 2 1".
  static Partition parse(const std::string& s) {
    std::vector<int> v;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
      std::istringstream ts(tok);
      int x;
      while (ts >> x) v.push_back(x);
      if (!ts.eof()) throw std::invalid_argument("malformed partition '" + s + "'");
    }
    if (v.empty()) throw std::invalid_argument("empty partition");
    return Partition(std::move(v));
  }

  const std::vector<int>& parts() const { return p_; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
  mpz_class aut() const {
    mpz_class r = 1;
    for (std::size_t i = 0; i < p_.size();) {
      std::size_t j = i;
      while (j < p_.size() && p_[j] == p_[i]) ++j;
      r *= factorial(static_cast<unsigned>(j - i));
      i = j;
    }
    return r;
  }
  std::string str(char sep = ',') const {
    std::string s;
    for (std::size_t i = 0; i < p_.size(); ++i)
      s += (i ? std::string(1, sep) : "") + std::to_string(p_[i]);
    return s;
  }
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> p_;
};

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ...
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Number of simple branch points, 2g - 2 + l(mu) + |mu|.
inline int branch_points(int g, const Partition& mu) {
  return 2 * g - 2 + mu.length() + mu.size();
}

inline Rational mz(const mpz_class& z) { return Rational(z); }

// h = r!/|Aut| * H.
inline Rational from_normalized(int g, const Partition& mu, const Rational& H) {
  return H * mz(factorial(static_cast<unsigned>(branch_points(g, mu)))) /
         mz(mu.aut());
}

// Closed forms for genus zero with one or two parts, in the normalization
// H = |Aut| h / r!.
inline std::optional<Rational> unstable_normalized(int g, const Partition& mu) {
  if (g != 0 || mu.length() > 2) return std::nullopt;
  const auto& p = mu.parts();
  if (mu.length() == 1) {
    const int k = p[0];
    Rational v = k >= 2 ? pow(Rational(k), k - 2) : Rational(1, k);
    return v / mz(factorial(k));
  }
  const int a = p[0], b = p[1];
  return pow(Rational(a), a) * pow(Rational(b), b) /
         (mz(factorial(a)) * mz(factorial(b)) * Rational(a + b));
}

// Memoized cut-and-join recursion on H_g(mu) = |Aut| h / r!, which reads
// r H_g(mu) = sum_{i<j} (mu_i + mu_j) H_g(join)
//   + 1/2 sum_i sum_{alpha+beta=mu_i} alpha beta (H_{g-1}(cut)
//     + sum_{g1, nu1 u nu2} H_{g1}(nu1, alpha) H_{g-g1}(nu2, beta)).
class CutJoin {
 public:
  Rational normalized(int g, const Partition& mu) {
    if (g < 0) return Rational();
    if (auto u = unstable_normalized(g, mu)) return *u;
    auto key = std::make_pair(g, mu.parts());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const auto& p = mu.parts();
    const int ell = mu.length();
    Rational acc;
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j) {
        std::vector<int> q{p[i] + p[j]};
        for (int k = 0; k < ell; ++k)
          if (k != i && k != j) q.push_back(p[k]);
        acc += Rational(p[i] + p[j]) * normalized(g, Partition(q));
      }
    Rational cut;
    for (int i = 0; i < ell; ++i) {
      std::vector<int> rest;
      for (int k = 0; k < ell; ++k)
        if (k != i) rest.push_back(p[k]);
      const int r = static_cast<int>(rest.size());
      for (int alpha = 1; alpha < p[i]; ++alpha) {
        const int beta = p[i] - alpha;
        std::vector<int> q = rest;
        q.push_back(alpha);
        q.push_back(beta);
        Rational inner = normalized(g - 1, Partition(q));
        for (int g1 = 0; g1 <= g; ++g1)
          for (unsigned mask = 0; mask < (1u << r); ++mask) {
            std::vector<int> left{alpha}, right{beta};
            for (int k = 0; k < r; ++k)
              (mask >> k & 1u ? left : right).push_back(rest[k]);
            Rational x = normalized(g1, Partition(left));
            if (x.is_zero()) continue;
            inner += x * normalized(g - g1, Partition(right));
          }
        cut += Rational(alpha * beta) * inner;
      }
    }
    acc += Rational(1, 2) * cut;
    Rational v = acc / Rational(branch_points(g, mu));
    memo_.emplace(std::move(key), v);
    return v;
  }

  Rational hurwitz(int g, const Partition& mu) {
    check_args(g, mu);
    return from_normalized(g, mu, normalized(g, mu));
  }

  static void check_args(int g, const Partition& mu) {
    if (g < 0) throw std::domain_error("genus must be non-negative");
    if (mu.length() == 0) throw std::domain_error("empty partition");
  }

 private:
  std::map<std::pair<int, std::vector<int>>, Rational> memo_;
};

inline Rational h_direct(int g, const Partition& mu) {
  CutJoin cj;
  return cj.hurwitz(g, mu);
}

// h_{g,mu} from the linear Hodge integrals of (g, l(mu)).
inline Rational hurwitz_elsv(int g, const Partition& mu, const HodgeTable& table) {
  CutJoin::check_args(g, mu);
  if (auto u = unstable_normalized(g, mu)) return from_normalized(g, mu, *u);
  const int ell = mu.length();
  const auto& p = mu.parts();
  if (!table.has_cell(g, ell))
    throw MissingEntry("missing table entry for " + cell_name(g, ell));
  const int dim = moduli_dim(g, ell);
  std::vector<std::vector<Rational>> powers(ell);
  for (int i = 0; i < ell; ++i)
    for (int n = 0; n <= dim; ++n) powers[i].push_back(pow(Rational(p[i]), n));
  Rational sum;
  for (const auto& n : ordered_tuples(ell, dim)) {
    Rational c = table.get(g, n);
    if (c.is_zero()) continue;
    for (int i = 0; i < ell; ++i) c *= powers[i][n[i]];
    sum += c;
  }
  Rational pref(1);
  for (int x : p) pref *= pow(Rational(x), x) / mz(factorial(x));
  return from_normalized(g, mu, pref * sum);
}

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteLimits {
  int max_degree = 5;
  int max_branch = 8;
};

// Counts r-tuples of transpositions in S_d whose product has cycle type mu
// and which generate a transitive subgroup, divided by d!.
inline Rational h_brute(int g, const Partition& mu, BruteLimits lim = {}) {
  CutJoin::check_args(g, mu);
  const int d = mu.size();
  const int r = branch_points(g, mu);
  if (d > lim.max_degree || r > lim.max_branch || d > 8)
    throw LimitExceeded("brute force limit exceeded (d=" + std::to_string(d) +
                        ", r=" + std::to_string(r) + ")");
  if (r < 0) return Rational();
  // state: permutation images and component labels, 4 bits each
  auto encode = [d](const std::vector<int>& perm, const std::vector<int>& comp) {
    std::uint64_t k = 0;
    for (int i = 0; i < d; ++i) k = k << 4 | static_cast<std::uint64_t>(perm[i]);
    for (int i = 0; i < d; ++i) k = k << 4 | static_cast<std::uint64_t>(comp[i]);
    return k;
  };
  auto decode = [d](std::uint64_t k, std::vector<int>& perm, std::vector<int>& comp) {
    for (int i = d - 1; i >= 0; --i) { comp[i] = static_cast<int>(k & 15u); k >>= 4; }
    for (int i = d - 1; i >= 0; --i) { perm[i] = static_cast<int>(k & 15u); k >>= 4; }
  };
  std::vector<int> perm(d), comp(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::iota(comp.begin(), comp.end(), 0);
  std::unordered_map<std::uint64_t, std::uint64_t> cur{{encode(perm, comp), 1}}, next;
  for (int step = 0; step < r; ++step) {
    next.clear();
    for (const auto& [key, count] : cur) {
      decode(key, perm, comp);
      for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) {
          std::vector<int> p2 = perm, c2 = comp;
          std::swap(p2[a], p2[b]);
          const int from = std::max(c2[a], c2[b]), to = std::min(c2[a], c2[b]);
          for (int& c : c2)
            if (c == from) c = to;
          next[encode(p2, c2)] += count;
        }
    }
    std::swap(cur, next);
  }
  mpz_class total = 0;
  for (const auto& [key, count] : cur) {
    decode(key, perm, comp);
    if (std::any_of(comp.begin(), comp.end(), [](int c) { return c != 0; }))
      continue;
    std::vector<int> cycles;
    std::vector<bool> seen(d, false);
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) { seen[j] = true; ++len; }
      cycles.push_back(len);
    }
    if (Partition(cycles) == mu) total += mpz_class(std::to_string(count));
  }
  return Rational(total) / mz(factorial(d));
}

// Recovers <tau_n Lambda^vee(1)>_{g,ell} from cut-and-join Hurwitz numbers on
// the grid of non-increasing mu in {1..3g-2+ell}^ell by an exact linear
// solve in the monomial symmetric basis; surplus samples must be consistent.
inline std::map<std::vector<int>, Rational> elsv_invert(int g, int ell) {
  if (!is_stable(g, ell)) throw std::domain_error("unstable " + cell_name(g, ell));
  const int dim = moduli_dim(g, ell);
  const int grid = dim + 1;
  std::vector<std::vector<int>> keys;
  for (auto& n : ordered_tuples(ell, dim))
    if (std::is_sorted(n.begin(), n.end(), std::greater<>())) keys.push_back(n);
  std::vector<std::vector<int>> samples;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int max_part) {
    if (static_cast<int>(cur.size()) == ell) {
      samples.push_back(cur);
      return;
    }
    for (int x = max_part; x >= 1; --x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(grid);
  CutJoin cj;
  const std::size_t nk = keys.size();
  std::vector<std::vector<Rational>> rows;
  for (const auto& mu : samples) {
    std::vector<Rational> row(nk + 1);
    for (std::size_t c = 0; c < nk; ++c) {
      std::vector<int> perm = keys[c];
      std::sort(perm.begin(), perm.end());
      do {
        Rational m(1);
        for (int i = 0; i < ell; ++i) m *= pow(Rational(mu[i]), perm[i]);
        row[c] += m;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    Partition p(mu);
    Rational y = cj.normalized(g, p);
    for (int x : mu) y *= mz(factorial(x)) / pow(Rational(x), x);
    row[nk] = y;
    rows.push_back(std::move(row));
  }
  // Gauss-Jordan over Q
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nk; ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) throw std::runtime_error("sample grid is rank deficient");
    std::swap(rows[piv], rows[rank]);
    const Rational inv = Rational(1) / rows[rank][c];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][c].is_zero()) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k <= nk; ++k) rows[i][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i)
    if (!rows[i][nk].is_zero())
      throw IdentityViolation("inconsistent samples in ELSV inversion at " +
                              cell_name(g, ell));
  std::map<std::vector<int>, Rational> out;
  for (std::size_t c = 0; c < nk; ++c) out[keys[c]] = rows[c][nk];
  return out;
}

// Re-derives the two hard-coded base cells from Hurwitz numbers.
inline bool verify_base_cases() {
  const HodgeTable base = HodgeTable::with_base_entries();
  for (const Cell c : {Cell{0, 3}, Cell{1, 1}})
    if (elsv_invert(c.g, c.ell) != base.cell_values(c)) return false;
  return true;
}

enum class HurwitzMethod { elsv, cutjoin, brute };

inline std::string method_name(HurwitzMethod m) {
  switch (m) {
    case HurwitzMethod::elsv: return "elsv";
    case HurwitzMethod::cutjoin: return "cutjoin";
    default: return "brute";
  }
}

struct HurwitzRow {
  int g = 0;
  Partition mu;
  Rational h;
  std::string method;
  bool checked = false;
};

struct TableRequest {
  int g_min = 1;
  int g_max = 1;
  int size_max = 1;
  HurwitzMethod method = HurwitzMethod::cutjoin;
  bool cross_check = false;
  int complexity_budget = 9;
  FillOptions fill;
  // Supplies a table covering the given cells; defaults to a fresh fill.
  std::function<HodgeTable(const std::vector<Cell>&)> hodge_provider;
};

// Rows sorted by genus, then |mu|, then reverse lexicographic mu. With
// cross_check every row is recomputed by each other method that is in range
// (ELSV within the complexity budget, brute force within its limits).
inline std::vector<HurwitzRow> table_generate(const TableRequest& req) {
  if (req.g_min < 0 || req.g_max < req.g_min || req.size_max < 1)
    throw std::domain_error("empty table range");
  std::vector<std::pair<int, Partition>> todo;
  for (int g = req.g_min; g <= req.g_max; ++g)
    for (int d = 1; d <= req.size_max; ++d)
      for (auto& mu : partitions_of(d)) todo.emplace_back(g, mu);
  auto in_budget = [&](int g, const Partition& mu) {
    return !is_stable(g, mu.length()) ||
           euler_char(g, mu.length()) <= req.complexity_budget;
  };
  const bool need_elsv = req.method == HurwitzMethod::elsv || req.cross_check;
  std::vector<Cell> cells;
  for (const auto& [g, mu] : todo) {
    if (req.method == HurwitzMethod::elsv && !in_budget(g, mu))
      throw LimitExceeded("complexity budget exceeded at " +
                          cell_name(g, mu.length()));
    if (need_elsv && in_budget(g, mu) && is_stable(g, mu.length()))
      cells.push_back({g, mu.length()});
  }
  HodgeTable table = HodgeTable::with_base_entries();
  if (!cells.empty())
    table = req.hodge_provider ? req.hodge_provider(cells)
                               : fill_cells(cells, Method::cutjoin, req.fill);
  CutJoin cj;
  std::vector<HurwitzRow> rows;
  for (const auto& [g, mu] : todo) {
    HurwitzRow row{g, mu, Rational(), method_name(req.method), false};
    switch (req.method) {
      case HurwitzMethod::elsv: row.h = hurwitz_elsv(g, mu, table); break;
      case HurwitzMethod::cutjoin: row.h = cj.hurwitz(g, mu); break;
      case HurwitzMethod::brute: row.h = h_brute(g, mu); break;
    }
    if (req.cross_check) {
      std::vector<std::pair<std::string, Rational>> others;
      if (req.method != HurwitzMethod::cutjoin)
        others.emplace_back("cutjoin", cj.hurwitz(g, mu));
      if (req.method != HurwitzMethod::elsv && in_budget(g, mu))
        others.emplace_back("elsv", hurwitz_elsv(g, mu, table));
      if (req.method != HurwitzMethod::brute) {
        try {
          others.emplace_back("brute", h_brute(g, mu));
        } catch (const LimitExceeded&) {
        }
      }
      for (const auto& [name, v] : others)
        if (v != row.h)
          throw IdentityViolation("methods disagree at g=" + std::to_string(g) +
                                  " mu=(" + mu.str() + "): " + row.method +
                                  " " + row.h.str() + " vs " + name + " " +
                                  v.str());
      row.checked = !others.empty();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hurwitz

#endif  // HURWITZ_HURWITZ_HPP
