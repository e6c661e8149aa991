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

#include "leglab/verifier.hpp"

#include <stdexcept>

#include "leglab/families.hpp"
#include "leglab/projection.hpp"

namespace leglab::verifier {

namespace {

using families::bernoulli_numbers;
using families::bernoulli_poly;
using families::bernstein_poly;
using families::euler_polys;
using families::hermite_number;
using families::hermite_poly;
using families::legendre;
using projection::monomial_term;

struct IdentityTraits {
  const char* name;
  bool takes_j;       // second index present (Orthogonality, ThmBernstein)
  bool takes_variant; // Euler-symbol reading applies
  const char* correction_note;  // nullptr when no correction is registered
};

const IdentityTraits& traits(IdentityId id) {
  static const IdentityTraits table[] = {
      {"orthogonality", true, false, nullptr},
      {"monomial-eq15", false, false, nullptr},
      {"thm-bernoulli", false, false, "drop leading factor 2"},
      {"thm-hermite", false, false, nullptr},
      {"thm-bernstein", true, false, "multiply by binomial(n,j)"},
      {"eq14-bernoulli-conv", false, false, nullptr},
      {"kim-euler-conv", false, true, "interpret E_{n-l+1} as E_{n-l+1}(0)"},
      {"thm-bernoulli-conv-legendre", false, false, nullptr},
      {"thm-euler-conv-legendre", false, true, nullptr},
  };
  return table[static_cast<int>(id)];
}

void validate(IdentityId id, const IdentityParams& params) {
  const auto& t = traits(id);
  if (params.n < 0) {
    throw std::invalid_argument("verifier: negative n");
  }
  if (t.takes_j != params.j.has_value()) {
    throw std::invalid_argument(params.j.has_value()
                                    ? "verifier: identity takes no second index"
                                    : "verifier: identity requires a second index");
  }
  if (params.j && (*params.j < 0 || (id == IdentityId::ThmBernstein && *params.j > params.n))) {
    throw std::invalid_argument("verifier: second index out of range");
  }
  if (params.variant && !t.takes_variant) {
    throw std::invalid_argument("verifier: identity takes no Euler variant");
  }
}

EulerVariant variant_of(const IdentityParams& params) {
  return params.variant.value_or(EulerVariant::EulerAtZero);
}

Rational euler_value(EulerVariant variant, int m) {
  return variant == EulerVariant::EulerNumber ? families::euler_number(m)
                                              : families::euler_at_zero(m);
}

// sum_{k=0}^{n} B_k(x) B_{n-k}(x)
Poly bernoulli_convolution(int n) {
  std::vector<Poly> b;
  b.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) b.push_back(bernoulli_poly(k));
  Poly sum;
  for (int k = 0; k <= n; ++k) sum = sum + b[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
  return sum;
}

// sum_{k=0}^{n} E_k(x) E_{n-k}(x)
Poly euler_convolution(int n) {
  const auto e = euler_polys(n);
  Poly sum;
  for (int k = 0; k <= n; ++k) sum = sum + e[static_cast<std::size_t>(k)] * e[static_cast<std::size_t>(n - k)];
  return sum;
}

// Printed prefactor of the Bernoulli/Hermite/Bernstein theorems and the
// Bernoulli convolution theorem, kept verbatim (not simplified to
// 2^(k+1)(2k+1)).
Rational prefactor_wide(int k) {
  return Rational(pow(Integer(2), static_cast<unsigned long>(k) + 2) * k +
                  pow(Integer(2), static_cast<unsigned long>(k) + 1));
}

// Printed prefactor of the Euler convolution theorem: 2^(k+1) k + 2^k.
Rational prefactor_narrow(int k) {
  return Rational(pow(Integer(2), static_cast<unsigned long>(k) + 1) * k +
                  pow(Integer(2), static_cast<unsigned long>(k)));
}

// Literal Bernoulli-theorem coefficients; with_leading_two keeps the
// printed overall factor 2, the registered correction drops it.
std::vector<Rational> bernoulli_theorem_coeffs(int n, bool with_leading_two) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sum;
    for (int j = 0; j <= n; ++j) {
      sum += Rational(binomial(n, j)) * b[static_cast<std::size_t>(n - j)] * monomial_term(j, k);
    }
    c[static_cast<std::size_t>(k)] = prefactor_wide(k) * sum;
    if (with_leading_two) c[static_cast<std::size_t>(k)] *= Rational(2);
  }
  return c;
}

std::vector<Rational> hermite_theorem_coeffs(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sum;
    for (int j = 0; j <= n; ++j) {
      sum += Rational(pow(Integer(2), static_cast<unsigned long>(j)) * binomial(n, j)) *
             monomial_term(j, k) * hermite_number(n - j);
    }
    c[static_cast<std::size_t>(k)] = prefactor_wide(k) * sum;
  }
  return c;
}

// Literal Bernstein-theorem coefficients; the registered correction
// multiplies each one by binomial(n,j).
std::vector<Rational> bernstein_theorem_coeffs(int n, int j, bool with_binomial) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sum;
    for (int l = 0; l <= n - j; ++l) {
      Rational term = Rational(binomial(n - j, l)) * monomial_term(l + j, k);
      if (l % 2 != 0) term = -term;
      sum += term;
    }
    c[static_cast<std::size_t>(k)] = prefactor_wide(k) * sum;
    if (with_binomial) c[static_cast<std::size_t>(k)] *= Rational(binomial(n, j));
  }
  return c;
}

std::vector<Rational> bernoulli_conv_theorem_coeffs(int n) {
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational conv_part;
    for (int l = 0; l <= n - 2; ++l) {
      Rational inner;
      for (int j = 0; j <= l; ++j) {
        inner += Rational(binomial(l, j)) * b[static_cast<std::size_t>(l - j)] * monomial_term(j, k);
      }
      conv_part += Rational(binomial(n + 2, l)) * b[static_cast<std::size_t>(n - l)] * inner;
    }
    Rational direct_part;
    for (int l = 0; l <= n; ++l) {
      direct_part += Rational(binomial(n, l)) * b[static_cast<std::size_t>(n - l)] * monomial_term(l, k);
    }
    c[static_cast<std::size_t>(k)] =
        prefactor_wide(k) *
        (Rational(2, n + 2) * conv_part + Rational(n + 1) * direct_part);
  }
  return c;
}

std::vector<Rational> euler_conv_theorem_coeffs(int n, EulerVariant variant) {
  std::vector<Rational> euler_values(static_cast<std::size_t>(n) + 2);
  for (int m = 0; m <= n + 1; ++m) euler_values[static_cast<std::size_t>(m)] = euler_value(variant, m);
  const auto b = bernoulli_numbers(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational sum;
    for (int l = 0; l <= n; ++l) {
      Rational inner;
      for (int j = 0; j <= l; ++j) {
        inner += Rational(binomial(l, j)) * b[static_cast<std::size_t>(l - j)] * monomial_term(j, k);
      }
      sum += Rational(binomial(n + 2, l)) * euler_values[static_cast<std::size_t>(n - l + 1)] * inner;
    }
    c[static_cast<std::size_t>(k)] = Rational(-8, n + 2) * prefactor_narrow(k) * sum;
  }
  return c;
}

// RHS of the Bernoulli convolution identity:
// 2/(n+2) sum_{l=0}^{n-2} binomial(n+2,l) B_{n-l} B_l(x) + (n+1) B_n(x),
// with the empty-sum convention for n < 2.
Poly eq14_rhs(int n) {
  const auto b = bernoulli_numbers(n);
  Poly conv_sum;
  for (int l = 0; l <= n - 2; ++l) {
    conv_sum = conv_sum + Rational(binomial(n + 2, l)) * b[static_cast<std::size_t>(n - l)] * bernoulli_poly(l);
  }
  return Rational(2, n + 2) * conv_sum + Rational(n + 1) * bernoulli_poly(n);
}

// RHS of the Euler convolution identity:
// -4/(n+2) sum_{l=0}^{n} binomial(n+2,l) E_{n-l+1} B_l(x).
Poly kim_euler_rhs(int n, EulerVariant variant) {
  Poly sum;
  for (int l = 0; l <= n; ++l) {
    sum = sum + Rational(binomial(n + 2, l)) * euler_value(variant, n - l + 1) * bernoulli_poly(l);
  }
  return Rational(-4, n + 2) * sum;
}

Poly reconstruct_coeffs(const std::vector<Rational>& coeffs) {
  Poly sum;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    sum = sum + coeffs[k] * legendre(static_cast<int>(k));
  }
  return sum;
}

std::optional<Poly> rhs_corrected(IdentityId id, const IdentityParams& params) {
  switch (id) {
    case IdentityId::ThmBernoulli:
      return reconstruct_coeffs(bernoulli_theorem_coeffs(params.n, /*with_leading_two=*/false));
    case IdentityId::ThmBernstein:
      return reconstruct_coeffs(
          bernstein_theorem_coeffs(params.n, *params.j, /*with_binomial=*/true));
    case IdentityId::KimEulerConv:
      return kim_euler_rhs(params.n, EulerVariant::EulerAtZero);
    default:
      return std::nullopt;
  }
}

}  // namespace

const char* identity_name(IdentityId id) { return traits(id).name; }

IdentityId identity_from_name(std::string_view name) {
  for (const auto id : all_identities()) {
    if (name == traits(id).name) return id;
  }
  throw std::invalid_argument("verifier: unknown identity \"" + std::string(name) + "\"");
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = {
      IdentityId::Orthogonality,
      IdentityId::MonomialEq15,
      IdentityId::ThmBernoulli,
      IdentityId::ThmHermite,
      IdentityId::ThmBernstein,
      IdentityId::Eq14BernoulliConv,
      IdentityId::KimEulerConv,
      IdentityId::ThmBernoulliConvLegendre,
      IdentityId::ThmEulerConvLegendre,
  };
  return ids;
}

const char* variant_name(EulerVariant variant) {
  return variant == EulerVariant::EulerAtZero ? "euler-at-zero" : "euler-number";
}

EulerVariant variant_from_name(std::string_view name) {
  if (name == "euler-at-zero") return EulerVariant::EulerAtZero;
  if (name == "euler-number") return EulerVariant::EulerNumber;
  throw std::invalid_argument("verifier: unknown variant \"" + std::string(name) + "\"");
}

Poly lhs_oracle(IdentityId id, const IdentityParams& params) {
  validate(id, params);
  switch (id) {
    case IdentityId::Orthogonality:
      return Poly::constant(projection::orthogonality_value(*params.j, params.n));
    case IdentityId::MonomialEq15:
      return Poly::monomial(params.n);
    case IdentityId::ThmBernoulli:
      return bernoulli_poly(params.n);
    case IdentityId::ThmHermite:
      return hermite_poly(params.n);
    case IdentityId::ThmBernstein:
      return bernstein_poly(*params.j, params.n);
    case IdentityId::Eq14BernoulliConv:
    case IdentityId::ThmBernoulliConvLegendre:
      return bernoulli_convolution(params.n);
    case IdentityId::KimEulerConv:
    case IdentityId::ThmEulerConvLegendre:
      return euler_convolution(params.n);
  }
  throw std::invalid_argument("verifier: unknown identity");
}

std::vector<Rational> rhs_literal_coefficients(IdentityId id, const IdentityParams& params) {
  validate(id, params);
  switch (id) {
    case IdentityId::MonomialEq15: {
      std::vector<Rational> c(static_cast<std::size_t>(params.n) + 1);
      for (int k = 0; k <= params.n; ++k) {
        c[static_cast<std::size_t>(k)] = projection::monomial_coefficient(params.n, k);
      }
      return c;
    }
    case IdentityId::ThmBernoulli:
      return bernoulli_theorem_coeffs(params.n, /*with_leading_two=*/true);
    case IdentityId::ThmHermite:
      return hermite_theorem_coeffs(params.n);
    case IdentityId::ThmBernstein:
      return bernstein_theorem_coeffs(params.n, *params.j, /*with_binomial=*/false);
    case IdentityId::ThmBernoulliConvLegendre:
      return bernoulli_conv_theorem_coeffs(params.n);
    case IdentityId::ThmEulerConvLegendre:
      return euler_conv_theorem_coeffs(params.n, variant_of(params));
    default:
      throw std::invalid_argument("verifier: identity is not stated in the Legendre basis");
  }
}

Poly rhs_literal(IdentityId id, const IdentityParams& params) {
  validate(id, params);
  switch (id) {
    case IdentityId::Orthogonality: {
      const Rational expected =
          *params.j == params.n ? Rational(2, 2 * params.n + 1) : Rational(0);
      return Poly::constant(expected);
    }
    case IdentityId::Eq14BernoulliConv:
      return eq14_rhs(params.n);
    case IdentityId::KimEulerConv:
      return kim_euler_rhs(params.n, variant_of(params));
    default:
      return reconstruct_coeffs(rhs_literal_coefficients(id, params));
  }
}

IdentityReport verify(IdentityId id, const IdentityParams& params) {
  validate(id, params);
  IdentityParams normalized = params;
  if (traits(id).takes_variant && !normalized.variant) {
    normalized.variant = EulerVariant::EulerAtZero;
  }

  IdentityReport report;
  report.identity = id;
  report.params = normalized;

  const Poly lhs = lhs_oracle(id, normalized);
  report.witness = rhs_literal(id, normalized) - lhs;
  report.literal_pass = report.witness.is_zero();

  if (const char* note = traits(id).correction_note) {
    report.correction_note = note;
    report.corrected_pass = rhs_corrected(id, normalized).value() == lhs;
  }
  return report;
}

std::vector<IdentityReport> verify_range(IdentityId id, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("verify_range: negative n_max");
  }
  std::vector<IdentityReport> reports;
  for (int n = 0; n <= n_max; ++n) {
    IdentityParams params;
    params.n = n;
    switch (id) {
      case IdentityId::Orthogonality:
        for (int m = 0; m <= n_max; ++m) {
          params.j = m;
          reports.push_back(verify(id, params));
        }
        break;
      case IdentityId::ThmBernstein:
        for (int j = 0; j <= n; ++j) {
          params.j = j;
          reports.push_back(verify(id, params));
        }
        break;
      case IdentityId::KimEulerConv:
        for (const auto variant : {EulerVariant::EulerAtZero, EulerVariant::EulerNumber}) {
          params.variant = variant;
          reports.push_back(verify(id, params));
        }
        break;
      default:
        reports.push_back(verify(id, params));
        break;
    }
  }
  return reports;
}

bool expected_literal(IdentityId id, const IdentityParams& params) {
  switch (id) {
    case IdentityId::ThmBernoulli:
      return false;
    case IdentityId::ThmBernstein:
      return binomial(params.n, params.j.value_or(0)) == 1;
    case IdentityId::KimEulerConv:
    case IdentityId::ThmEulerConvLegendre:
      return variant_of(params) == EulerVariant::EulerAtZero;
    default:
      return true;
  }
}

std::optional<bool> expected_corrected(IdentityId id, const IdentityParams&) {
  if (traits(id).correction_note == nullptr) return std::nullopt;
  return true;
}

bool matches_expected(const IdentityReport& report) {
  return report.literal_pass == expected_literal(report.identity, report.params) &&
         report.corrected_pass == expected_corrected(report.identity, report.params);
}

}  // namespace leglab::verifier
