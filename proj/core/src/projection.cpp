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

#include "leglab/projection.hpp"

#include <stdexcept>
#include <string>

#include "leglab/families.hpp"

namespace leglab::projection {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative index");
  }
}

Rational oracle_coefficient(const Poly& q, int k) {
  return Rational(2 * k + 1, 2) * inner_product(q, families::legendre(k));
}

Rational closed_form_coefficient(const Poly& q, int k) {
  Rational sum;
  const auto& coeffs = q.coefficients();
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    sum += coeffs[j] * monomial_coefficient(static_cast<int>(j), k);
  }
  return sum;
}

}  // namespace

const char* route_name(Route route) {
  switch (route) {
    case Route::OracleIntegration:
      return "oracle";
    case Route::Proposition1:
      return "prop1";
    case Route::ClosedForm:
      return "closed-form";
  }
  throw std::invalid_argument("route_name: unknown route");
}

Route route_from_name(std::string_view name) {
  if (name == "oracle") return Route::OracleIntegration;
  if (name == "prop1") return Route::Proposition1;
  if (name == "closed-form") return Route::ClosedForm;
  throw std::invalid_argument("route_from_name: unknown route \"" + std::string(name) + "\"");
}

Rational inner_product(const Poly& p, const Poly& q) {
  return integrate_definite(p * q, Rational(-1), Rational(1));
}

Rational orthogonality_value(int m, int n) {
  require_nonnegative(m, "orthogonality_value");
  require_nonnegative(n, "orthogonality_value");
  return inner_product(families::legendre(m), families::legendre(n));
}

Rational coefficient_prop1(const Poly& q, int k) {
  require_nonnegative(k, "coefficient_prop1");
  const Poly rodrigues_integrand =
      derivative(pow(Poly{Rational(-1), Rational(0), Rational(1)}, k), k);
  const Rational integral =
      integrate_definite(rodrigues_integrand * q, Rational(-1), Rational(1));
  const Rational scale(Integer(2 * k + 1),
                       factorial(k) * pow(Integer(2), static_cast<unsigned long>(k) + 1));
  return scale * integral;
}

Rational monomial_term(int j, int k) {
  require_nonnegative(j, "monomial_term");
  require_nonnegative(k, "monomial_term");
  if (k > j || (j - k) % 2 != 0) return Rational(0);
  const Integer num = factorial(j) * factorial((j + k + 2) / 2);
  const Integer den = factorial((j - k) / 2) * factorial(j + k + 2);
  return Rational(num, den);
}

Rational monomial_coefficient(int n, int k) {
  require_nonnegative(n, "monomial_coefficient");
  require_nonnegative(k, "monomial_coefficient");
  const Integer scale = Integer(2 * k + 1) * pow(Integer(2), static_cast<unsigned long>(k) + 1);
  return Rational(scale) * monomial_term(n, k);
}

LegendreExpansion expand(const Poly& q, int degree_bound, Route route) {
  require_nonnegative(degree_bound, "expand");
  if (q.degree().value_or(-1) > degree_bound) {
    throw std::invalid_argument(
        "expand: polynomial degree exceeds the requested basis bound");
  }
  LegendreExpansion expansion;
  expansion.source = route;
  expansion.coefficients.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (int k = 0; k <= degree_bound; ++k) {
    switch (route) {
      case Route::OracleIntegration:
        expansion.coefficients.push_back(oracle_coefficient(q, k));
        break;
      case Route::Proposition1:
        expansion.coefficients.push_back(coefficient_prop1(q, k));
        break;
      case Route::ClosedForm:
        expansion.coefficients.push_back(closed_form_coefficient(q, k));
        break;
    }
  }
  return expansion;
}

Poly reconstruct(const LegendreExpansion& expansion) {
  Poly sum;
  for (std::size_t k = 0; k < expansion.coefficients.size(); ++k) {
    if (expansion.coefficients[k].is_zero()) continue;
    sum = sum + expansion.coefficients[k] * families::legendre(static_cast<int>(k));
  }
  return sum;
}

}  // namespace leglab::projection
