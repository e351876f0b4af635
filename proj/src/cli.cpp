// Copyright 2026 The qortho Authors
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

#include "qortho/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qortho/errors.hpp"
#include "qortho/json_io.hpp"
#include "qortho/mub.hpp"
#include "qortho/paperlab.hpp"

namespace qortho::cli {

namespace {

using json_io::json;

constexpr double kExampleRelTol = 1e-8;
constexpr std::size_t kMaxCliPrime = 13;

enum class Format { Text, Json };

struct Common {
  Format format = Format::Text;
  double tol = kDefaultPrivacyTol;
};

void add_common(CLI::App* cmd, Common& c, bool with_tol = true) {
  cmd->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}}))
      ->default_str("text");
  if (with_tol) {
    cmd->add_option("--tol", c.tol, "Verdict tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }
}

std::string scalar_text(const json& v) {
  if (v.is_number_float()) {
    std::ostringstream s;
    s << std::setprecision(12) << v.get<double>();
    return s.str();
  }
  return v.dump();
}

bool is_flat_array(const json& v) {
  return v.is_array() && std::none_of(v.begin(), v.end(), [](const json& e) {
           return e.is_object() || (e.is_array() && !e.empty() && e[0].is_array());
         });
}

void print_text(const json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t width = 0;
  for (const auto& [k, _] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    out << pad << std::left << std::setw(static_cast<int>(width) + 2) << k;
    if (v.is_object()) {
      out << "\n";
      print_text(v, out, indent + 2);
    } else if (v.is_array() && !is_flat_array(v)) {
      out << "\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_object()) {
          out << pad << "  [" << i << "]\n";
          print_text(v[i], out, indent + 4);
        } else {
          out << pad << "  " << v[i].dump() << "\n";
        }
      }
    } else if (v.is_array()) {
      out << "[";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
      out << "]\n";
    } else {
      out << scalar_text(v) << "\n";
    }
  }
}

void emit(const json& j, Format f, std::ostream& out) {
  if (f == Format::Json) {
    out << json_io::dump(j);
  } else {
    print_text(j, out);
  }
}

json error_object(const std::string& kind, const std::string& message,
                  std::optional<double> residual = std::nullopt) {
  json e{{"kind", kind}, {"message", message}};
  if (residual) e["residual"] = *residual;
  return json{{"error", std::move(e)}};
}

void emit_error(const json& e, Format f, std::ostream& err) {
  if (f == Format::Json) {
    err << json_io::dump(e);
    return;
  }
  const json& body = e.at("error");
  err << "error: " << body.at("kind").get<std::string>() << ": "
      << body.at("message").get<std::string>() << "\n";
  if (body.contains("residual")) err << "  residual: " << scalar_text(body.at("residual")) << "\n";
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const InputError*>(&e) || dynamic_cast<const DimensionError*>(&e) ||
      dynamic_cast<const EmptyInputError*>(&e)) {
    return kExitUsage;
  }
  return kExitFailure;
}

json error_json(const Error& e) {
  if (const auto* na = dynamic_cast<const NotAnAlgebraError*>(&e)) {
    return error_object(e.kind(), e.what(), na->residual());
  }
  return error_object(e.kind(), e.what());
}

UnitalStarAlgebra load_algebra(const std::string& path) {
  return build(json_io::spec_from_json(json_io::read_file(path)));
}

// ---------------------------------------------------------------------------

int cmd_analyze(const std::string& pa, const std::string& pb, const Common& c,
                std::ostream& out) {
  const auto a = load_algebra(pa);
  const auto b = load_algebra(pb);
  if (a.ambient() != b.ambient()) {
    throw DimensionError("algebras live in different ambient dimensions");
  }
  emit(json_io::to_json(analyze(a, b, c.tol)), c.format, out);
  return kExitOk;
}

json verdicts(const OrthogonalityReport& r) {
  return json{{"eps_a_privatizes_b", r.eps_a_privatizes_b},
              {"eps_b_privatizes_a", r.eps_b_privatizes_a},
              {"forward_bound_ok", r.forward_bound_ok},
              {"converse_bound_ok", r.converse_bound_ok}};
}

int cmd_example(const std::string& name, std::optional<double> delta,
                std::optional<std::size_t> dim, const Common& c, std::ostream& out) {
  json j{{"example", name}};
  double rel = 0;
  if (name == "mub") {
    if (delta) throw InputError("--delta does not apply to the mub example");
    const std::size_t n = dim.value_or(4);
    const auto ex = example_mub(n, c.tol);
    rel = std::abs(ex.report.q - 1.0);
    j["dim"] = n;
    j["computed_q"] = ex.report.q;
    j["expected_q"] = 1.0;
    j["abs_diff"] = rel;
    j["rel_diff"] = rel;
    j["unbiasedness_epsilon"] = ex.unbiasedness_eps;
    j.update(verdicts(ex.report));
    j["report"] = json_io::to_json(ex.report);
  } else {
    if (dim) throw InputError("--dim only applies to the mub example");
    const double d = delta.value_or(0.0);
    const auto ex = name == "hybrid" ? example_hybrid(d) : example_subsystem(d);
    const auto ev = evaluate(ex, c.tol);
    rel = ev.rel_diff;
    j["delta"] = d;
    j["computed_q"] = ev.report.q;
    j["expected_q"] = ev.expected_q;
    j["abs_diff"] = ev.abs_diff;
    j["rel_diff"] = ev.rel_diff;
    j.update(verdicts(ev.report));
    j["report"] = json_io::to_json(ev.report);
  }
  const bool match = rel <= kExampleRelTol;
  j["match"] = match;
  emit(j, c.format, out);
  return match ? kExitOk : kExitFailure;
}

int cmd_trials(std::optional<std::size_t> n, const std::string& pa, const std::string& pb,
               std::uint64_t seed, std::size_t count, const Common& c, std::ostream& out) {
  TrialConfig cfg;
  cfg.spec_a = json_io::spec_from_json(json_io::read_file(pa));
  cfg.spec_b = json_io::spec_from_json(json_io::read_file(pb));
  cfg.n = n.value_or(cfg.spec_a.n);
  cfg.seed = seed;
  cfg.count = count;
  cfg.tol = c.tol;
  const auto report = run_trials(cfg);
  emit(json_io::to_json(report), c.format, out);
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_mub(const std::string& family_path, std::optional<std::size_t> prime, const Common& c,
            std::ostream& out) {
  if (!prime && family_path.empty()) throw InputError("mub needs --family or --prime");
  BasisFamily family;
  if (prime) {
    if (!is_prime(*prime) || *prime > kMaxCliPrime) {
      throw InputError("--prime must be a prime no larger than " + std::to_string(kMaxCliPrime));
    }
    family = mub_family_prime(*prime);
  } else {
    family = json_io::family_from_json(json_io::read_file(family_path));
  }
  check_family(family);
  const auto stats = unbiasedness_stats(family);
  json j{{"n", family.n},
         {"bases", family.bases.size()},
         {"unbiasedness_epsilon", stats.max_eps},
         {"mean_epsilon", stats.mean_eps},
         {"pairwise_q", json_io::to_json(pairwise_q(family))}};
  emit(j, c.format, out);
  return kExitOk;
}

int cmd_validate(const std::string& path, const Common& c, std::ostream& out,
                 std::ostream& err) {
  const AlgebraSpec spec = json_io::spec_from_json(json_io::read_file(path));
  try {
    const auto report = validate(build(spec));
    emit(json_io::to_json(report), c.format, out);
    return report.passed ? kExitOk : kExitFailure;
  } catch (const NotAnAlgebraError& e) {
    // Report residuals of the orthonormalized span the input actually describes.
    const auto* s = std::get_if<spec::Span>(&spec.kind);
    if (s == nullptr) throw;
    const auto onb = gram_schmidt(s->matrices);
    emit(json_io::to_json(validate(onb)), c.format, out);
    emit_error(error_json(e), c.format, err);
    return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasiorthogonality and privacy analysis for matrix algebras", "qortho"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;

  std::string path_a, path_b;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compare two algebras");
  analyze_cmd->add_option("algebra_a", path_a, "Spec of A")->required();
  analyze_cmd->add_option("algebra_b", path_b, "Spec of B")->required();
  add_common(analyze_cmd, common);

  std::string example_name;
  std::optional<double> delta;
  std::optional<std::size_t> dim;
  auto* example_cmd = app.add_subcommand("example", "Run a built-in worked example");
  example_cmd->add_option("name", example_name, "hybrid, subsystem or mub")
      ->required()
      ->check(CLI::IsMember({"hybrid", "subsystem", "mub"}));
  example_cmd->add_option("--delta", delta, "Perturbation strength (>= 0)");
  example_cmd->add_option("--dim", dim, "Dimension for the mub example (>= 2)");
  add_common(example_cmd, common);

  std::optional<std::size_t> trial_n;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  auto* trials_cmd = app.add_subcommand("trials", "Seeded random-conjugation trials");
  trials_cmd->add_option("--a", path_a, "Spec of A")->required();
  trials_cmd->add_option("--b", path_b, "Spec of B")->required();
  trials_cmd->add_option("--n", trial_n, "Ambient dimension (must match the specs)");
  trials_cmd->add_option("--seed", seed, "Base seed")->capture_default_str();
  trials_cmd->add_option("--count", count, "Number of trials")->capture_default_str();
  add_common(trials_cmd, common);

  std::string family_path;
  std::optional<std::size_t> prime;
  auto* mub_cmd = app.add_subcommand("mub", "Unbiasedness of a basis family");
  auto* family_opt = mub_cmd->add_option("--family", family_path, "Basis family JSON");
  auto* prime_opt = mub_cmd->add_option("--prime", prime, "Built-in family for a prime p");
  family_opt->excludes(prime_opt);
  add_common(mub_cmd, common, false);

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check an algebra spec");
  validate_cmd->add_option("algebra", validate_path, "Spec to validate")->required();
  add_common(validate_cmd, common, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(path_a, path_b, common, out);
    if (*example_cmd) return cmd_example(example_name, delta, dim, common, out);
    if (*trials_cmd) return cmd_trials(trial_n, path_a, path_b, seed, count, common, out);
    if (*mub_cmd) return cmd_mub(family_path, prime, common, out);
    return cmd_validate(validate_path, common, out, err);
  } catch (const Error& e) {
    emit_error(error_json(e), common.format, err);
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error(error_object("InternalError", e.what()), common.format, err);
    return kExitFailure;
  }
}

}  // namespace qortho::cli
