// Copyright 2026 The leglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEGLAB_TEST_SUPPORT_HPP
#define LEGLAB_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "leglab/poly.hpp"

namespace leglab::testing {

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 16);
  return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree(rng)) + 1);
  for (auto& c : coeffs) c = random_rational(rng);
  return Poly(std::move(coeffs));
}

}  // namespace leglab::testing

#endif  // LEGLAB_TEST_SUPPORT_HPP
