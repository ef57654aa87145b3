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

#ifndef HURWITZ_UNIPOLY_HPP
#define HURWITZ_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// Dense univariate polynomial over Q. The coefficient vector never ends in a
// zero, so the zero polynomial is the empty vector and has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static UniPoly monomial(const Rational& c, int k) {
    if (k < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly variable() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(int k) const {
    if (k < 0 || k > degree()) return Rational();
    return c_[k];
  }
  int valuation() const {
    for (int k = 0; k <= degree(); ++k)
      if (!c_[k].is_zero()) return k;
    return -1;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      r[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(r));
  }

  // Multiplies by t^k.
  UniPoly shifted(int k) const {
    if (is_zero()) return {};
    if (k < 0) {
      for (int i = 0; i < -k; ++i)
        if (!c_[i].is_zero()) throw std::domain_error("not divisible by t");
      return UniPoly(std::vector<Rational>(c_.begin() - k, c_.end()));
    }
    std::vector<Rational> r(k);
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(std::move(r));
  }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Rational& c = c_[k];
      if (c.is_zero()) continue;
      Rational mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) os << "-";
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      bool unit = mag == Rational(1);
      if (!unit || k == 0) os << mag;
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace hurwitz

#endif  // HURWITZ_UNIPOLY_HPP
