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

#ifndef HURWITZ_LAURENT_HPP
#define HURWITZ_LAURENT_HPP

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"
#include "hurwitz/unipoly.hpp"

namespace hurwitz {

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series sum_{d >= lo} c_d x^d known exactly for all
// d <= trunc(). Degrees above trunc() are unknown and may not be read.
// A series with trunc() == kExact is a Laurent polynomial.
//
// Truncation is propagated pessimistically: every operation returns the
// largest order it can certify from the orders of its inputs.
template <class F>
class BasicLaurent {
 public:
  static constexpr int kExact = 1 << 28;

  BasicLaurent() = default;  // exact zero
  BasicLaurent(int lo, std::vector<F> coeffs, int trunc)
      : lo_(lo), trunc_(clamp(trunc)), c_(std::move(coeffs)) {
    normalize();
  }
  static BasicLaurent exact(int lo, std::vector<F> coeffs) {
    return BasicLaurent(lo, std::move(coeffs), kExact);
  }
  static BasicLaurent monomial(const F& c, int deg) {
    return BasicLaurent(deg, {c}, kExact);
  }
  // sum_k p_k x^k.
  static BasicLaurent from_poly(const UniPoly& p) {
    return exact(0, p.coefficients());
  }
  // p(t) as a series in x = 1/t.
  static BasicLaurent from_poly_in_inverse(const UniPoly& p) {
    std::vector<F> v(p.coefficients().rbegin(), p.coefficients().rend());
    return exact(-p.degree(), std::move(v));
  }

  int trunc() const { return trunc_; }
  bool is_exact() const { return trunc_ >= kExact; }
  int low() const { return lo_; }
  int high() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  bool known_zero() const { return c_.empty(); }

  // Lowest degree that may be nonzero.
  int valuation() const {
    if (c_.empty()) return is_exact() ? kExact : trunc_ + 1;
    return lo_;
  }

  F coeff(int d) const {
    if (d > trunc_)
      throw TruncationError("coefficient of degree " + std::to_string(d) +
                            " is beyond truncation order " +
                            std::to_string(trunc_));
    if (d < lo_ || d > high()) return F();
    return c_[d - lo_];
  }

  // Forget everything above order t.
  BasicLaurent truncated(int t) const {
    if (t > trunc_)
      throw TruncationError("cannot raise truncation order " +
                            std::to_string(trunc_) + " to " +
                            std::to_string(t));
    return BasicLaurent(lo_, c_, t);
  }

  BasicLaurent& operator+=(const BasicLaurent& o) { return axpy(o, F(1)); }
  BasicLaurent& operator-=(const BasicLaurent& o) { return axpy(o, F(-1)); }
  BasicLaurent& operator*=(const F& s) {
    if (s == F()) return *this = BasicLaurent();
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend BasicLaurent operator+(BasicLaurent a, const BasicLaurent& b) {
    return a += b;
  }
  friend BasicLaurent operator-(BasicLaurent a, const BasicLaurent& b) {
    return a -= b;
  }
  friend BasicLaurent operator-(BasicLaurent a) { return a *= F(-1); }
  friend BasicLaurent operator*(BasicLaurent a, const F& s) { return a *= s; }
  friend BasicLaurent operator*(const F& s, BasicLaurent a) { return a *= s; }

  friend BasicLaurent operator*(const BasicLaurent& a, const BasicLaurent& b) {
    if ((a.is_exact() && a.known_zero()) || (b.is_exact() && b.known_zero()))
      return BasicLaurent();
    const int t = clamp(std::min(sat(a.valuation() + b.trunc_),
                                 sat(b.valuation() + a.trunc_)));
    if (a.known_zero() || b.known_zero())
      return BasicLaurent(0, {}, t);
    const int lo = a.lo_ + b.lo_;
    const int hi = std::min(t, a.high() + b.high());
    if (hi < lo) return BasicLaurent(0, {}, t);
    std::vector<F> r(hi - lo + 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == F()) continue;
      const int di = a.lo_ + static_cast<int>(i);
      const int jmax = std::min<int>(static_cast<int>(b.c_.size()) - 1,
                                     hi - di - b.lo_);
      for (int j = 0; j <= jmax; ++j) r[di + b.lo_ + j - lo] += a.c_[i] * b.c_[j];
    }
    return BasicLaurent(lo, std::move(r), t);
  }
  BasicLaurent& operator*=(const BasicLaurent& o) { return *this = *this * o; }

  // Multiplication by x^k.
  BasicLaurent shifted(int k) const {
    return BasicLaurent(lo_ + k, c_, is_exact() ? kExact : trunc_ + k);
  }

  // d/dx.
  BasicLaurent derivative() const {
    std::vector<F> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
      r[i] = c_[i] * F(lo_ + static_cast<int>(i));
    return BasicLaurent(lo_ - 1, std::move(r),
                        is_exact() ? kExact : trunc_ - 1);
  }

  friend bool operator==(const BasicLaurent& a, const BasicLaurent& b) {
    return a.trunc_ == b.trunc_ && a.c_ == b.c_ &&
           (a.c_.empty() || a.lo_ == b.lo_);
  }

  // Agreement of all coefficients both series know.
  bool agrees_with(const BasicLaurent& o) const {
    const int t = std::min(trunc_, o.trunc_);
    const int lo = std::min(valuation(), o.valuation());
    for (int d = lo; d <= t && d < kExact; ++d) {
      if (d > std::max(high(), o.high())) break;
      if (coeff(d) != o.coeff(d)) return false;
    }
    return true;
  }

  std::string str(const std::string& var = "x") const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == F()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i] << ")*" << var << "^" << lo_ + static_cast<int>(i);
    }
    if (first) os << "0";
    if (!is_exact()) os << " + O(" << var << "^" << trunc_ + 1 << ")";
    return os.str();
  }

 private:
  static int sat(long v) {
    return static_cast<int>(std::min<long>(v, kExact));
  }
  // Offsets applied to an exact order stay exact.
  static int clamp(int t) { return t >= kExact / 2 ? kExact : t; }

  BasicLaurent& axpy(const BasicLaurent& o, const F& s) {
    const int t = std::min(trunc_, o.trunc_);
    if (o.c_.empty()) return *this = BasicLaurent(lo_, c_, t);
    if (c_.empty()) {
      BasicLaurent r(o.lo_, o.c_, t);
      r *= s;
      r.trunc_ = t;
      return *this = r;
    }
    const int lo = std::min(lo_, o.lo_);
    const int hi = std::min(t, std::max(high(), o.high()));
    if (hi < lo) return *this = BasicLaurent(0, {}, t);
    std::vector<F> r(hi - lo + 1);
    for (int d = std::max(lo_, lo); d <= std::min(high(), hi); ++d)
      r[d - lo] = c_[d - lo_];
    for (int d = std::max(o.lo_, lo); d <= std::min(o.high(), hi); ++d)
      r[d - lo] += s * o.c_[d - o.lo_];
    return *this = BasicLaurent(lo, std::move(r), t);
  }

  void normalize() {
    if (high() > trunc_) {
      const int keep = trunc_ - lo_ + 1;
      c_.resize(keep > 0 ? keep : 0);
    }
    std::size_t first = 0;
    while (first < c_.size() && c_[first] == F()) ++first;
    if (first == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    if (first) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
      lo_ += static_cast<int>(first);
    }
    while (c_.back() == F()) c_.pop_back();
  }

  int lo_ = 0;
  int trunc_ = kExact;
  std::vector<F> c_;
};

using Laurent = BasicLaurent<Rational>;

// 1/s. For a Laurent polynomial that is not a monomial the result is an
// infinite series and cap gives its truncation order.
template <class F>
BasicLaurent<F> reciprocal(const BasicLaurent<F>& s,
                           int cap = BasicLaurent<F>::kExact) {
  using L = BasicLaurent<F>;
  if (s.known_zero()) throw std::domain_error("reciprocal of zero series");
  const int v = s.valuation();
  if (s.is_exact() && s.high() == v) return L::monomial(F(1) / s.coeff(v), -v);
  int t = s.is_exact() ? L::kExact : s.trunc() - 2 * v;
  t = std::min(t, cap);
  if (t >= L::kExact)
    throw TruncationError("reciprocal of an infinite series needs a cap");
  const int r = t + v;  // relative precision
  if (r < 0) return L(-v, {}, t);
  std::vector<F> b(r + 1);
  const F inv = F(1) / s.coeff(v);
  b[0] = inv;
  for (int k = 1; k <= r; ++k) {
    F acc{};
    const int imax = std::min(k, s.high() - v);
    for (int i = 1; i <= imax; ++i) acc += s.coeff(v + i) * b[k - i];
    b[k] = -acc * inv;
  }
  return L(-v, std::move(b), t);
}

// f(g). When f is only known to finite order the inner series must have
// positive valuation so that the unknown tail stays unknown at high order.
template <class F>
BasicLaurent<F> substitute(const BasicLaurent<F>& f, const BasicLaurent<F>& g,
                           int cap = BasicLaurent<F>::kExact) {
  using L = BasicLaurent<F>;
  if (f.known_zero()) {
    if (f.is_exact()) return L();
    if (g.valuation() < 1)
      throw TruncationError("truncation underflow in substitution");
    return L(0, {}, std::min<long>((long)g.valuation() * (f.trunc() + 1) - 1,
                                   L::kExact));
  }
  const int vg = g.valuation();
  int t = L::kExact;
  if (!f.is_exact()) {
    if (vg < 1)
      throw TruncationError(
          "truncation underflow: substituting a series of valuation " +
          std::to_string(vg) + " into a series known to order " +
          std::to_string(f.trunc()));
    t = static_cast<int>(
        std::min<long>((long)vg * (f.trunc() + 1) - 1, L::kExact));
  }
  t = std::min(t, cap);
  L acc = L(0, {}, t);
  if (f.high() >= 0) {
    L p = L::monomial(F(1), 0);
    for (int k = 0; k <= f.high(); ++k) {
      if (k > 0) p = p * g;
      if (k >= f.low() && f.coeff(k) != F()) acc += p * f.coeff(k);
    }
  }
  if (f.low() < 0) {
    L inv = reciprocal(g, cap);
    L p = inv;
    for (int k = -1; k >= f.low(); --k) {
      if (k < -1) p = p * inv;
      if (k <= f.high() && f.coeff(k) != F()) acc += p * f.coeff(k);
    }
  }
  return acc;
}

template <class F>
BasicLaurent<F> substitute(const UniPoly& p, const BasicLaurent<F>& g) {
  return substitute(BasicLaurent<F>::from_poly(p), g);
}

// Non-negative powers of t of a series written in x = 1/t, i.e. the
// coefficients of x^d for d <= 0.
inline UniPoly polynomial_part(const Laurent& s) {
  if (s.trunc() < 0)
    throw TruncationError("insufficient truncation: need order 0, have " +
                          std::to_string(s.trunc()));
  if (s.known_zero() || s.low() > 0) return UniPoly();
  std::vector<Rational> c(-s.low() + 1);
  for (int k = 0; k <= -s.low(); ++k) c[k] = s.coeff(-k);
  return UniPoly(std::move(c));
}

}  // namespace hurwitz

#endif  // HURWITZ_LAURENT_HPP
