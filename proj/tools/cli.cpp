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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "leglab/families.hpp"
#include "leglab/poly.hpp"
#include "leglab/projection.hpp"

#ifndef LEGLAB_VERSION
#define LEGLAB_VERSION "0.0.0"
#endif

namespace leglab::cli {

namespace {

using json = nlohmann::ordered_json;
using verifier::IdentityId;
using verifier::IdentityReport;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

json poly_to_json(const Poly& p) {
  json array = json::array();
  for (const auto& c : p.coefficients()) array.push_back(c.to_string());
  return array;
}

json coefficients_to_json(const std::vector<Rational>& coefficients) {
  json array = json::array();
  for (const auto& c : coefficients) array.push_back(c.to_string());
  return array;
}

Poly poly_from_json_text(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("--poly: invalid JSON: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw std::invalid_argument("--poly: expected a JSON array of rational strings");
  }
  std::vector<Rational> coefficients;
  coefficients.reserve(parsed.size());
  for (const auto& element : parsed) {
    if (!element.is_string()) {
      throw std::invalid_argument("--poly: coefficients must be strings like \"-1/2\"");
    }
    coefficients.push_back(Rational::from_string(element.get<std::string>()));
  }
  return Poly(std::move(coefficients));
}

json params_to_json(const verifier::IdentityParams& params) {
  json j;
  j["n"] = params.n;
  if (params.j) j["j"] = *params.j;
  if (params.variant) j["variant"] = verifier::variant_name(*params.variant);
  return j;
}

json report_to_json(const IdentityReport& report) {
  json j;
  j["identity"] = verifier::identity_name(report.identity);
  j["params"] = params_to_json(report.params);
  j["literal_pass"] = report.literal_pass;
  if (report.corrected_pass) {
    j["corrected_pass"] = *report.corrected_pass;
    j["correction_note"] = report.correction_note;
  }
  j["witness"] = poly_to_json(report.witness);
  return j;
}

std::string params_text(const verifier::IdentityParams& params) {
  std::string text = "n=" + std::to_string(params.n);
  if (params.j) text += " j=" + std::to_string(*params.j);
  if (params.variant) text += std::string(" variant=") + verifier::variant_name(*params.variant);
  return text;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string witness_text(const Poly& witness) {
  std::ostringstream os;
  os << witness;
  return os.str();
}

std::string render_csv(const std::vector<IdentityReport>& reports) {
  std::string out =
      "identity,n,j,variant,literal_pass,corrected_pass,correction_note,witness\r\n";
  for (const auto& report : reports) {
    out += verifier::identity_name(report.identity);
    out += ',';
    out += std::to_string(report.params.n);
    out += ',';
    if (report.params.j) out += std::to_string(*report.params.j);
    out += ',';
    if (report.params.variant) out += verifier::variant_name(*report.params.variant);
    out += ',';
    out += report.literal_pass ? "true" : "false";
    out += ',';
    if (report.corrected_pass) out += *report.corrected_pass ? "true" : "false";
    out += ',';
    out += csv_field(report.correction_note);
    out += ',';
    out += csv_field(witness_text(report.witness));
    out += "\r\n";
  }
  return out;
}

std::string render_table(const std::vector<IdentityReport>& reports, int n_max,
                         const std::function<bool(const IdentityReport&)>& matches,
                         bool with_meta) {
  std::ostringstream os;
  if (with_meta) {
    os << "# leglab " << LEGLAB_VERSION << " verdict table\n"
       << "# generated_at: " << utc_timestamp() << "\n"
       << "# n_max: " << n_max << "\n";
  }
  os << std::left << std::setw(28) << "identity" << std::setw(30) << "params"
     << std::setw(9) << "literal" << std::setw(11) << "corrected" << "expected\n";
  std::size_t mismatches = 0;
  for (const auto& report : reports) {
    const bool ok = matches(report);
    if (!ok) ++mismatches;
    os << std::left << std::setw(28) << verifier::identity_name(report.identity)
       << std::setw(30) << params_text(report.params) << std::setw(9)
       << (report.literal_pass ? "pass" : "FAIL") << std::setw(11)
       << (report.corrected_pass ? (*report.corrected_pass ? "pass" : "FAIL") : "-")
       << (ok ? "yes" : "NO") << "\n";
  }
  os << reports.size() << " checks, " << (reports.size() - mismatches)
     << " matching the registered expectations\n";
  return os.str();
}

std::vector<IdentityReport> collect_reports(IdentityId id, int n_max,
                                            std::optional<verifier::EulerVariant> forced) {
  if (!forced) return verifier::verify_range(id, n_max);
  std::vector<IdentityReport> reports;
  reports.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    verifier::IdentityParams params;
    params.n = n;
    params.variant = forced;
    reports.push_back(verifier::verify(id, params));
  }
  return reports;
}

int emit_document(const std::string& document, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << document;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot open \"" << out_path << "\" for writing\n";
    return kExitUsage;
  }
  file << document;
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks* hooks) {
  CLI::App app{"exact Legendre-basis expansions of the classical polynomial "
               "families, plus a literal-vs-corrected identity verifier"};
  app.require_subcommand(1);

  std::string family_text;
  std::string poly_text;
  std::string identity_text;
  std::string variant_text;
  std::string route_text = "oracle";
  std::string format_text = "json";
  std::string out_path;
  int degree_bound = -1;
  int n_max = 12;
  bool no_meta = false;

  auto* gen = app.add_subcommand("gen", "Print one family polynomial as a JSON coefficient list");
  gen->add_option("family-spec", family_text,
                  "e.g. legendre:5, bernoulli:4, euler:3, hermite:6, bernstein:2,5")
      ->required();

  auto* expand = app.add_subcommand("expand", "Expand a polynomial in the Legendre basis");
  auto* family_opt = expand->add_option("--family", family_text, "expand a family polynomial");
  auto* poly_opt = expand->add_option(
      "--poly", poly_text, "expand a polynomial literal, e.g. [\"1/6\",\"-1\",\"1\"]");
  family_opt->excludes(poly_opt);
  expand->add_option("--degree-bound", degree_bound,
                     "size of the basis P_0..P_N (default: the polynomial degree)");
  expand->add_option("--route", route_text, "coefficient route (default oracle)")
      ->check(CLI::IsMember({"oracle", "prop1"}));

  auto* verify = app.add_subcommand("verify", "Verify one identity for every n up to --n-max");
  verify->add_option("identity-id", identity_text, "e.g. orthogonality, thm-bernoulli")
      ->required();
  verify->add_option("--n-max", n_max, "largest index to check (default 12)");
  verify->add_option("--variant", variant_text,
                     "force one reading of the Euler convolution symbol")
      ->check(CLI::IsMember({"euler-number", "euler-at-zero"}));

  auto* report = app.add_subcommand("report", "Run the full verdict table over all identities");
  report->add_option("--n-max", n_max, "largest index to check (default 12)");
  report->add_option("--format", format_text, "output format (default json)")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  report->add_option("--out", out_path, "write the document to a file instead of stdout");
  report->add_flag("--no-meta", no_meta, "suppress the metadata header");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const auto matches = [&](const IdentityReport& r) {
    return hooks && hooks->matches_expected ? hooks->matches_expected(r)
                                            : verifier::matches_expected(r);
  };

  try {
    if (gen->parsed()) {
      const Poly poly = families::generate(families::FamilySpec::parse(family_text));
      out << poly_to_json(poly).dump() << "\n";
      return 0;
    }

    if (expand->parsed()) {
      if (family_opt->count() + poly_opt->count() != 1) {
        err << "error: expand needs exactly one of --family or --poly\n";
        return kExitUsage;
      }
      Poly poly;
      int natural_bound = 0;
      if (family_opt->count() == 1) {
        const auto spec = families::FamilySpec::parse(family_text);
        poly = families::generate(spec);
        natural_bound = spec.n;
      } else {
        poly = poly_from_json_text(poly_text);
        natural_bound = poly.degree().value_or(0);
      }
      const int bound = degree_bound >= 0 ? degree_bound : natural_bound;
      const auto route = projection::route_from_name(route_text);
      const auto expansion = projection::expand(poly, bound, route);

      json document;
      document["basis"] = "legendre";
      document["coefficients"] = coefficients_to_json(expansion.coefficients);
      document["source"] = projection::route_name(expansion.source);
      out << document.dump() << "\n";
      return 0;
    }

    if (verify->parsed()) {
      if (n_max < 0) {
        err << "error: --n-max must be nonnegative\n";
        return kExitUsage;
      }
      const auto id = verifier::identity_from_name(identity_text);
      std::optional<verifier::EulerVariant> forced;
      if (!variant_text.empty()) {
        if (id != IdentityId::KimEulerConv && id != IdentityId::ThmEulerConvLegendre) {
          err << "error: --variant only applies to kim-euler-conv and "
                 "thm-euler-conv-legendre\n";
          return kExitUsage;
        }
        forced = verifier::variant_from_name(variant_text);
      }
      const auto reports = collect_reports(id, n_max, forced);

      json document = json::array();
      std::size_t mismatches = 0;
      for (const auto& r : reports) {
        document.push_back(report_to_json(r));
        if (!matches(r)) ++mismatches;
      }
      out << document.dump() << "\n";
      if (mismatches != 0) {
        err << "verdict mismatch: " << mismatches << " of " << reports.size()
            << " checks differ from the registered expectations\n";
        return kExitMismatch;
      }
      return 0;
    }

    // report
    if (n_max < 0) {
      err << "error: --n-max must be nonnegative\n";
      return kExitUsage;
    }
    std::vector<IdentityReport> reports;
    for (const auto id : verifier::all_identities()) {
      auto rows = verifier::verify_range(id, n_max);
      reports.insert(reports.end(), rows.begin(), rows.end());
    }
    std::size_t mismatches = 0;
    for (const auto& r : reports) {
      if (!matches(r)) ++mismatches;
    }

    std::string document;
    if (format_text == "json") {
      json j;
      if (!no_meta) {
        j["meta"] = {{"tool", "leglab"},
                     {"version", LEGLAB_VERSION},
                     {"generated_at", utc_timestamp()}};
      }
      j["n_max"] = n_max;
      json rows = json::array();
      for (const auto& r : reports) rows.push_back(report_to_json(r));
      j["reports"] = std::move(rows);
      document = j.dump();
      document += "\n";
    } else if (format_text == "csv") {
      document = render_csv(reports);
    } else {
      document = render_table(reports, n_max, matches, !no_meta);
    }

    const int emit_status = emit_document(document, out_path, out, err);
    if (emit_status != 0) return emit_status;
    if (mismatches != 0) {
      err << "verdict mismatch: " << mismatches << " of " << reports.size()
          << " checks differ from the registered expectations\n";
      return kExitMismatch;
    }
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace leglab::cli
