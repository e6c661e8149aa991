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

#ifndef LEGLAB_VERIFIER_HPP
#define LEGLAB_VERIFIER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leglab/poly.hpp"

// Exhaustive exact checks of the printed identities relating the classical
// families to the Legendre basis.
//
// Each identity is evaluated twice: the "literal" right-hand side is the
// published formula exactly as printed (prefactors kept verbatim,
// unsimplified), the "oracle" left-hand side is built directly from the
// family generators. Both sides are compared as fully expanded
// monomial-basis polynomials, never as coefficient lists from different
// bases. Where a literal formula is known not to hold, a registered
// correction (a machine-applied transformation plus a prose note) is
// evaluated as well, and the report carries both verdicts.

namespace leglab::verifier {

enum class IdentityId {
  Orthogonality,
  MonomialEq15,
  ThmBernoulli,
  ThmHermite,
  ThmBernstein,
  Eq14BernoulliConv,
  KimEulerConv,
  ThmBernoulliConvLegendre,
  ThmEulerConvLegendre,
};

/// The two readings of the underdetermined symbol E_{n-l+1} in the Euler
/// convolution formulas: the integer Euler number 2^m E_m(1/2), or the
/// Euler polynomial value at zero E_m(0).
enum class EulerVariant { EulerAtZero, EulerNumber };

/// Kebab-case identity id, e.g. "thm-bernoulli".
const char* identity_name(IdentityId id);
/// Inverse of identity_name; throws std::invalid_argument on unknown names.
IdentityId identity_from_name(std::string_view name);
/// All identities in canonical (declaration) order.
const std::vector<IdentityId>& all_identities();

/// "euler-at-zero" or "euler-number".
const char* variant_name(EulerVariant variant);
EulerVariant variant_from_name(std::string_view name);

/// Parameters of one identity instance.
///   n       - the main index, present for every identity
///   j       - second index: basis row m for Orthogonality, the Bernstein
///             lower index j (requires j <= n)
///   variant - Euler-symbol reading, only for KimEulerConv and
///             ThmEulerConvLegendre (defaults to EulerAtZero)
struct IdentityParams {
  int n = 0;
  std::optional<int> j;
  std::optional<EulerVariant> variant;
};

/// Verdict record for one identity at one parameter tuple.
struct IdentityReport {
  IdentityId identity = IdentityId::Orthogonality;
  IdentityParams params;
  bool literal_pass = false;
  /// Present only when a correction is registered for the identity.
  std::optional<bool> corrected_pass;
  /// Prose note of the registered correction; empty when none exists.
  std::string correction_note;
  /// Literal RHS minus oracle LHS; the zero polynomial iff literal_pass.
  Poly witness;
};

/// The identity's left-hand side, built directly from the family
/// generators (e.g. sum_k B_k(x) B_{n-k}(x)), as an expanded polynomial.
Poly lhs_oracle(IdentityId id, const IdentityParams& params);

/// The identity's right-hand side exactly as printed. For the
/// Legendre-basis theorems the combination sum_k C_k P_k is returned fully
/// reconstructed in the monomial basis.
Poly rhs_literal(IdentityId id, const IdentityParams& params);

/// Literal coefficients C_0..C_n for the Legendre-basis theorems
/// (MonomialEq15, ThmBernoulli, ThmHermite, ThmBernstein,
/// ThmBernoulliConvLegendre, ThmEulerConvLegendre). Throws
/// std::invalid_argument for identities that are not stated in the basis.
std::vector<Rational> rhs_literal_coefficients(IdentityId id, const IdentityParams& params);

/// Evaluates one identity instance and reports both verdicts.
IdentityReport verify(IdentityId id, const IdentityParams& params);

/// verify over every admissible parameter tuple with n <= n_max, in
/// deterministic lexicographic parameter order. Orthogonality runs the
/// full (m, n) grid; ThmBernstein runs all 0 <= j <= n; KimEulerConv runs
/// both Euler-symbol variants.
std::vector<IdentityReport> verify_range(IdentityId id, int n_max);

/// Registered expected verdicts: the frozen, oracle-confirmed table that
/// `report` checks actual results against.
bool expected_literal(IdentityId id, const IdentityParams& params);
std::optional<bool> expected_corrected(IdentityId id, const IdentityParams& params);
bool matches_expected(const IdentityReport& report);

}  // namespace leglab::verifier

#endif  // LEGLAB_VERIFIER_HPP
