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

#ifndef LEGLAB_PROJECTION_HPP
#define LEGLAB_PROJECTION_HPP

#include <string_view>
#include <vector>

#include "leglab/poly.hpp"

// Legendre-basis expansion over [-1, 1] by three independent routes:
//
//   OracleIntegration  C_k = (2k+1)/2 <q, P_k>, by direct exact integration
//                      (the ground truth the other routes are checked against)
//   Proposition1       C_k via the Rodrigues-form integrand
//   ClosedForm         C_k assembled from the closed-form monomial
//                      coefficients, by linearity
//
// All three agree exactly on every polynomial input.

namespace leglab::projection {

enum class Route { OracleIntegration, Proposition1, ClosedForm };

/// "oracle", "prop1" or "closed-form".
const char* route_name(Route route);
/// Inverse of route_name; throws std::invalid_argument on unknown names.
Route route_from_name(std::string_view name);

/// Coefficients C_0..C_n of q(x) = sum_k C_k P_k(x). Trailing zeros are
/// kept: the list length records the degree bound of the basis used, which
/// may exceed deg(q).
struct LegendreExpansion {
  std::vector<Rational> coefficients;
  Route source = Route::OracleIntegration;

  bool operator==(const LegendreExpansion&) const = default;
};

/// <p, q> = integral of p(x) q(x) over [-1, 1]. Symmetric, bilinear,
/// positive definite.
Rational inner_product(const Poly& p, const Poly& q);

/// <P_m, P_n>: 2/(2n+1) when m == n, zero otherwise.
Rational orthogonality_value(int m, int n);

/// C_k of q via the Rodrigues-form integrand:
/// (2k+1)/(k! 2^(k+1)) * integral of (d^k/dx^k (x^2-1)^k) q(x) dx.
Rational coefficient_prop1(const Poly& q, int k);

/// Shared closed-form building block
///   T(j,k) = j! ((j+k+2)/2)! / ( ((j-k)/2)! (j+k+2)! ),
/// defined as 0 when k > j or j-k is odd (the integral of P_k x^j over
/// [-1,1] vanishes there). Every parity-restricted sum in the identity
/// evaluators goes through this single zero-term convention.
Rational monomial_term(int j, int k);

/// k-th Legendre coefficient of x^n in closed form:
/// (2k+1) 2^(k+1) T(n,k); zero when k > n or n-k is odd.
/// Equals coefficient_prop1(x^n, k) exactly.
Rational monomial_coefficient(int n, int k);

/// Expands q over the basis P_0..P_degree_bound. Requires
/// deg(q) <= degree_bound (throws std::invalid_argument otherwise; the
/// bound is explicit so a low-degree q can be embedded in a larger basis).
LegendreExpansion expand(const Poly& q, int degree_bound,
                         Route route = Route::OracleIntegration);

/// sum_k C_k P_k(x) as an expanded polynomial; exact inverse of expand.
Poly reconstruct(const LegendreExpansion& expansion);

}  // namespace leglab::projection

#endif  // LEGLAB_PROJECTION_HPP
