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

#ifndef LEGLAB_FAMILIES_HPP
#define LEGLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leglab/poly.hpp"

// Exact generators for the five classical polynomial families and their
// number sequences. Everything here is a pure function of its arguments;
// generators may be called concurrently.

namespace leglab::families {

enum class Kind { Legendre, Bernoulli, Euler, Hermite, Bernstein };

/// Identifies one member of a family. Text form: "legendre:5",
/// "bernoulli:4", "euler:3", "hermite:6", "bernstein:2,5" (k,n).
struct FamilySpec {
  Kind kind = Kind::Legendre;
  int n = 0;
  std::optional<int> k;  // Bernstein basis index only, 0 <= k <= n

  /// Throws std::invalid_argument on malformed text or an invalid index
  /// combination (k is required for Bernstein and rejected elsewhere).
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
};

Poly generate(const FamilySpec& spec);

/// P_n from the Rodrigues form: (1/(n! 2^n)) d^n/dx^n (x^2-1)^n.
Poly legendre_rodrigues(int n);

/// P_n from the three-term recurrence
/// (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}, P_0 = 1, P_1 = x.
/// Agrees with legendre_rodrigues for every n.
Poly legendre_recurrence(int n);

/// The default Legendre generator.
inline Poly legendre(int n) { return legendre_recurrence(n); }

/// Residual of Legendre's differential equation in self-adjoint form:
/// d/dx[(1-x^2) P_n'(x)] + n(n+1) P_n(x); identically zero. Expanding the
/// bracket gives (1-x^2) P_n'' - 2x P_n'; a frequently misprinted variant
/// with two bare first derivatives is not satisfied by P_n.
Poly legendre_ode_residual(int n);

/// B_n with the convention B_1 = -1/2, from the recurrence
/// sum_{k=0}^{n} binomial(n+1,k) B_k = 0 (n >= 1), B_0 = 1.
Rational bernoulli_number(int n);

/// B_0..B_n_max in one sweep of the recurrence.
std::vector<Rational> bernoulli_numbers(int n_max);

/// B_n(x) = sum_j binomial(n,j) B_{n-j} x^j.
Poly bernoulli_poly(int n);

/// E_n(x) from E_n(x) = x^n - (1/2) sum_{k<n} binomial(n,k) E_k(x).
Poly euler_poly(int n);

/// E_0(x)..E_{n_max}(x) in one sweep of the recurrence.
std::vector<Poly> euler_polys(int n_max);

/// Euler number E_n = 2^n E_n(1/2); an integer for every n.
Rational euler_number(int n);

/// E_n(0), the Euler polynomial value at zero.
Rational euler_at_zero(int n);

/// Physicists' Hermite polynomial: H_0 = 1, H_1 = 2x,
/// H_{n+1} = 2x H_n - 2n H_{n-1}. Leading coefficient 2^n.
Poly hermite_poly(int n);

/// Hermite number H_n(0); zero for odd n.
Rational hermite_number(int n);

/// binomial(n,k) x^k (1-x)^(n-k), fully expanded; requires 0 <= k <= n.
Poly bernstein_poly(int k, int n);

}  // namespace leglab::families

#endif  // LEGLAB_FAMILIES_HPP
