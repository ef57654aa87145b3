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

#ifndef HURWITZ_MULTIPOLY_HPP
#define HURWITZ_MULTIPOLY_HPP

#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "hurwitz/rational.hpp"
#include "hurwitz/unipoly.hpp"

namespace hurwitz {

using Exponents = std::vector<int>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = e.size();
    for (int x : e) h = h * 1000003u ^ static_cast<std::size_t>(x + 1);
    return h;
  }
};

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Sparse polynomial over Q in a fixed number of variables. Zero coefficients
// are never stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit MultiPoly(std::size_t nvars = 0) : n_(nvars) {}

  // p(x_var) viewed inside an nvars-variable ring.
  static MultiPoly from_uni(const UniPoly& p, std::size_t var,
                            std::size_t nvars) {
    MultiPoly r(nvars);
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k).is_zero()) continue;
      Exponents e(nvars, 0);
      e[var] = k;
      r.t_.emplace(std::move(e), p.coeff(k));
    }
    return r;
  }
  static MultiPoly constant(const Rational& c, std::size_t nvars) {
    MultiPoly r(nvars);
    if (!c.is_zero()) r.t_.emplace(Exponents(nvars, 0), c);
    return r;
  }

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  Rational coeff(const Exponents& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Rational() : it->second;
  }

  void add_term(const Exponents& e, const Rational& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, hurwitz::total_degree(e));
    return d;
  }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e[var]);
    return d;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      t_.clear();
      return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    std::unordered_map<Exponents, Rational, ExponentsHash> acc;
    Exponents e(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        acc[e] += ca * cb;
      }
    MultiPoly r(a.n_);
    for (auto& [k, c] : acc)
      if (!c.is_zero()) r.t_.emplace(k, std::move(c));
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

  MultiPoly derivative(std::size_t var) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : t_) {
      if (e[var] == 0) continue;
      Exponents f = e;
      --f[var];
      r.t_.emplace(std::move(f), c * Rational(e[var]));
    }
    return r;
  }

  // Renames variable k of this polynomial to var_map[k] in a ring of nvars.
  MultiPoly embedded(std::span<const int> var_map, std::size_t nvars) const {
    if (var_map.size() != n_) throw std::invalid_argument("bad variable map");
    MultiPoly r(nvars);
    for (const auto& [e, c] : t_) {
      Exponents f(nvars, 0);
      for (std::size_t k = 0; k < n_; ++k) f[var_map[k]] += e[k];
      r.add_term(f, c);
    }
    return r;
  }

  Rational operator()(std::span<const Rational> x) const {
    if (x.size() != n_) throw std::invalid_argument("arity mismatch");
    Rational acc;
    for (const auto& [e, c] : t_) {
      Rational m = c;
      for (std::size_t i = 0; i < n_; ++i)
        if (e[i]) m *= pow(x[i], static_cast<unsigned>(e[i]));
      acc += m;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << "(" << it->second << ")";
      for (std::size_t i = 0; i < n_; ++i)
        if (it->first[i]) os << "*x" << i << "^" << it->first[i];
    }
    return os.str();
  }

 private:
  void check(const MultiPoly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  }
  std::size_t n_;
  Terms t_;
};

// (p(x) - p(y)) / (x - y) style exact division by x_i - x_j. Throws when the
// remainder is nonzero.
inline MultiPoly divided_difference(const MultiPoly& p, std::size_t i,
                                    std::size_t j) {
  const std::size_t n = p.nvars();
  if (i == j || i >= n || j >= n)
    throw std::invalid_argument("bad variable pair");
  std::map<int, MultiPoly> by_deg;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[i] = 0;
    auto it = by_deg.try_emplace(e[i], MultiPoly(n)).first;
    it->second.add_term(f, c);
  }
  if (by_deg.empty()) return MultiPoly(n);
  auto times_xj = [&](const MultiPoly& q) {
    MultiPoly r(n);
    for (const auto& [e, c] : q.terms()) {
      Exponents f = e;
      ++f[j];
      r.add_term(f, c);
    }
    return r;
  };
  // Horner: p = sum_k c_k x^k, q_{k-1} = c_k + x_j q_k.
  const int top = by_deg.rbegin()->first;
  MultiPoly q(n), result(n);
  for (int k = top; k >= 1; --k) {
    auto it = by_deg.find(k);
    q = times_xj(q);
    if (it != by_deg.end()) q += it->second;
    for (const auto& [e, c] : q.terms()) {
      Exponents f = e;
      f[i] = k - 1;
      result.add_term(f, c);
    }
  }
  MultiPoly rem = times_xj(q);
  if (auto it = by_deg.find(0); it != by_deg.end()) rem += it->second;
  if (!rem.is_zero()) throw std::domain_error("not antisymmetric");
  return result;
}

// A factor of a product whose variables are disjoint from the other
// factors: poly's variable k lands on slot vars[k].
struct PlacedFactor {
  const MultiPoly* poly;
  std::vector<int> vars;
};

// Collects sums of c * prod(factors) without materializing each product.
class TermAccumulator {
 public:
  explicit TermAccumulator(std::size_t nvars) : n_(nvars) {}

  void add_product(const Rational& c, std::span<const PlacedFactor> factors) {
    if (c.is_zero()) return;
    Exponents e(n_, 0);
    walk(c, factors, 0, e);
  }
  void add(const MultiPoly& p, const Rational& c = Rational(1)) {
    for (const auto& [e, x] : p.terms()) acc_[e] += c * x;
  }

  MultiPoly finish() {
    MultiPoly r(n_);
    for (auto& [e, c] : acc_) r.add_term(e, c);
    acc_.clear();
    return r;
  }

 private:
  void walk(const Rational& c, std::span<const PlacedFactor> fs,
            std::size_t k, Exponents& e) {
    if (k == fs.size()) {
      acc_[e] += c;
      return;
    }
    const PlacedFactor& f = fs[k];
    for (const auto& [fe, fc] : f.poly->terms()) {
      for (std::size_t v = 0; v < fe.size(); ++v) e[f.vars[v]] += fe[v];
      walk(c * fc, fs, k + 1, e);
      for (std::size_t v = 0; v < fe.size(); ++v) e[f.vars[v]] -= fe[v];
    }
  }

  std::size_t n_;
  std::unordered_map<Exponents, Rational, ExponentsHash> acc_;
};

}  // namespace hurwitz

#endif  // HURWITZ_MULTIPOLY_HPP
