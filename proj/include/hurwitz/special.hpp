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

#ifndef HURWITZ_SPECIAL_HPP
#define HURWITZ_SPECIAL_HPP

#include <stdexcept>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

// n!! for odd n of either sign; negative arguments follow n!! = (n+2)!!/(n+2)
// so that (-1)!! = 1, (-3)!! = -1, (-5)!! = 1/3. Even n >= 0 also allowed.
inline Rational double_factorial(int n) {
  if (n >= -1) {
    Rational r(1);
    for (int k = n; k > 1; k -= 2) r *= Rational(k);
    return r;
  }
  if (n % 2 == 0) throw std::domain_error("double factorial of negative even");
  Rational r(1);
  for (int k = -1; k > n; k -= 2) r /= Rational(k);
  return r;
}

// Bernoulli numbers with B_1 = -1/2, from sum_{k<=m} C(m+1,k) B_k = 0.
inline Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("negative Bernoulli index");
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 0; k < m; ++k)
      acc += Rational(mpq_class(binomial(m + 1, k))) * b[k];
    b[m] = -acc / Rational(m + 1);
  }
  return b[n];
}

}  // namespace hurwitz

#endif  // HURWITZ_SPECIAL_HPP
