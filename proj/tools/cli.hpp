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

#ifndef LEGLAB_CLI_HPP
#define LEGLAB_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "leglab/verifier.hpp"

namespace leglab::cli {

/// Test seam: lets a caller replace the registered-expectation check that
/// decides between exit statuses 0 and 1 for verify/report. The shipped
/// binary always uses verifier::matches_expected.
struct Hooks {
  std::function<bool(const verifier::IdentityReport&)> matches_expected;
};

/// Runs one CLI invocation. args excludes the program name.
///
/// Verbs:
///   gen <family-spec>
///   expand (--family <family-spec> | --poly <json>)
///          [--degree-bound N] [--route oracle|prop1]
///   verify <identity-id> [--n-max N] [--variant euler-number|euler-at-zero]
///   report [--n-max N] [--format json|csv|table] [--out PATH] [--no-meta]
///
/// Exit status: 0 on success with all verdicts matching the registered
/// expectations, 1 on a verdict mismatch, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks* hooks = nullptr);

}  // namespace leglab::cli

#endif  // LEGLAB_CLI_HPP
