// Copyright 2026 The ccqsim authors
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

// Command line front end: validates artifacts, evaluates error functionals,
// builds subset families and simultaneous ID codes, derandomizes codes, and
// runs full seeded experiments.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ccq/errors.hpp"
#include "ccq/experiment.hpp"
#include "ccq/json_io.hpp"
#include "ccq/pgm.hpp"

namespace {

using ccq::ExitCode;
using ordered_json = nlohmann::ordered_json;

struct GlobalOptions {
  double tol = ccq::kDefaultTol;
  bool json = false;
  bool quiet = false;
};

void emit(const GlobalOptions& opts, const ordered_json& payload, const std::string& text) {
  if (opts.quiet) {
    return;
  }
  if (opts.json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

ordered_json error_report_to_json(const ccq::ErrorReport& report) {
  ordered_json j;
  j["value"] = report.value;
  ordered_json argmax = ordered_json::array();
  for (const auto& idx : report.argmax) {
    argmax.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1, idx[3] + 1});
  }
  j["argmax"] = std::move(argmax);
  return j;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

int run_validate(const GlobalOptions& opts, const std::string& path) {
  const std::string text = ccq::read_text_file(path);
  ordered_json probe;
  try {
    probe = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ccq::ValidationError(std::string("invalid JSON: ") + e.what());
  }

  ordered_json result;
  std::string kind;
  bool pass = true;
  std::string detail;

  if (probe.contains("kind") && probe["kind"].is_string() &&
      probe["kind"].get<std::string>() == "sim-id-code") {
    kind = "sim-id-code";
    const ccq::SimultaneousIdCode code = ccq::sim_id_code_from_json(text, opts.tol);
    const ccq::SimultaneityReport sim = ccq::verify_simultaneous(code);
    const ccq::PovmValidationReport povm = [&code, &opts] {
      std::vector<ccq::ComplexMatrix> effects;
      for (const ccq::PovmEffect& e : code.underlying.effects()) {
        effects.push_back(e.matrix());
      }
      return ccq::validate_povm(effects, opts.tol);
    }();
    pass = sim.pass && povm.pass;
    result["simultaneity"] = {{"pass", sim.pass},
                              {"completeness_deviation", sim.completeness_deviation},
                              {"max_decomposition_deviation", sim.max_decomposition_deviation}};
    result["underlying_povm_pass"] = povm.pass;
    detail = "decomposition deviation " + std::to_string(sim.max_decomposition_deviation);
  } else if (probe.contains("kind")) {
    kind = "channel";
    const ccq::ChannelSpec spec = ccq::channel_spec_from_json(text);
    const ccq::CcqChannel channel = spec.build(opts.tol);  // throws when a state is invalid
    result["channel"] = {{"kind", spec.kind_name()},
                         {"nx", channel.nx()},
                         {"ny", channel.ny()},
                         {"dim", channel.dim()}};
    detail = spec.kind_name() + " channel, dim " + std::to_string(channel.dim());
  } else if (probe.contains("subsets")) {
    kind = "family";
    const ccq::SubsetFamily family = ccq::family_from_json(text);  // validates exactly
    result["family"] = {{"M", family.ground_size},
                        {"weight", family.weight},
                        {"cap", family.intersection_cap},
                        {"count", family.count()}};
    detail = std::to_string(family.count()) + " subsets of weight " +
             std::to_string(family.weight);
  } else if (probe.contains("decoder")) {
    kind = probe.contains("codewords_x") ? "deterministic-code" : "stochastic-code";
    const ccq::LoadedCode code = ccq::code_from_json(text, opts.tol);
    std::vector<ccq::ComplexMatrix> effects;
    const ccq::Povm& decoder = std::holds_alternative<ccq::DeterministicCode>(code)
                                   ? std::get<ccq::DeterministicCode>(code).decoder
                                   : std::get<ccq::StochasticTransmissionCode>(code).decoder;
    for (const ccq::PovmEffect& e : decoder.effects()) {
      effects.push_back(e.matrix());
    }
    const ccq::PovmValidationReport povm = ccq::validate_povm(effects, opts.tol);
    pass = povm.pass;
    result["decoder"] = {{"effects", effects.size()},
                         {"completeness_deviation", povm.completeness_deviation},
                         {"pass", povm.pass}};
    detail = "decoder completeness deviation " + std::to_string(povm.completeness_deviation);
  } else {
    throw ccq::ParameterError("unrecognized artifact in '" + path + "'");
  }

  result["kind"] = kind;
  result["pass"] = pass;
  emit(opts, result, (pass ? "valid " : "INVALID ") + kind + " (" + detail + ")\n");
  return pass ? 0 : static_cast<int>(ExitCode::kValidationFailure);
}

// ---------------------------------------------------------------------------
// eval-error
// ---------------------------------------------------------------------------

int run_eval_error(const GlobalOptions& opts, const std::string& code_path,
                   const std::string& channel_path) {
  const std::string code_text = ccq::read_text_file(code_path);
  const ccq::ChannelSpec spec = ccq::channel_spec_from_json(ccq::read_text_file(channel_path));

  ordered_json probe = ordered_json::parse(code_text, nullptr, false);
  ordered_json out;
  std::string text;
  if (probe.is_object() && probe.contains("kind") && probe["kind"].is_string() &&
      probe["kind"].get<std::string>() == "sim-id-code") {
    const ccq::SimultaneousIdCode code = ccq::sim_id_code_from_json(code_text, opts.tol);
    const ccq::BlockChannel ch = ccq::BlockChannel::memoryless(spec.build(opts.tol), code.id.k);
    const ccq::ErrorReport e1 = ccq::id_error_first(code.id, ch);
    const ccq::ErrorReport e2 = ccq::id_error_second(code.id, ch);
    out["e1"] = error_report_to_json(e1);
    out["e2"] = error_report_to_json(e2);
    text = "e1 = " + std::to_string(e1.value) + "\ne2 = " + std::to_string(e2.value) + "\n";
  } else {
    const ccq::LoadedCode loaded = ccq::code_from_json(code_text, opts.tol);
    const ccq::StochasticTransmissionCode code = ccq::as_stochastic(loaded);
    const ccq::BlockChannel ch = ccq::BlockChannel::memoryless(spec.build(opts.tol), code.k);
    const ccq::ErrorReport e = ccq::max_error(code, ch);
    const ccq::ErrorReport ebar = ccq::avg_error(code, ch);
    out["e"] = error_report_to_json(e);
    out["e_bar"] = {{"value", ebar.value}};
    text =
        "e     = " + std::to_string(e.value) + "\ne_bar = " + std::to_string(ebar.value) + "\n";
  }
  emit(opts, out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// build-family
// ---------------------------------------------------------------------------

int run_build_family(const GlobalOptions& opts, int m, double lambda, double epsilon, int target,
                     std::uint64_t seed, const std::string& out_path) {
  const ccq::FamilyBuildResult result = ccq::build_subset_family(m, lambda, epsilon, target, seed);
  ccq::write_text_file(out_path, ccq::family_to_json(result.family));
  const std::string report = ccq::family_build_report_to_json(result);
  emit(opts, ordered_json::parse(report),
       "family: " + std::to_string(result.family.count()) + "/" + std::to_string(target) +
           " subsets of weight " + std::to_string(result.family.weight) +
           (result.shortfall ? " (shortfall)" : "") + " -> " + out_path + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// build-id-code
// ---------------------------------------------------------------------------

int run_build_id_code(const GlobalOptions& opts, const std::string& code_path,
                      const std::string& family_a_path, const std::string& family_b_path,
                      const std::string& out_path) {
  const ccq::LoadedCode loaded = ccq::code_from_json(ccq::read_text_file(code_path), opts.tol);
  const ccq::StochasticTransmissionCode code = ccq::as_stochastic(loaded);
  const ccq::SubsetFamily fam_a = ccq::family_from_json(ccq::read_text_file(family_a_path));
  const ccq::SubsetFamily fam_b = ccq::family_from_json(ccq::read_text_file(family_b_path));
  const ccq::SimultaneousIdCode id_code = ccq::construct_sim_id_code(code, fam_a, fam_b);
  const ccq::SimultaneityReport sim = ccq::verify_simultaneous(id_code);
  ccq::write_text_file(out_path, ccq::sim_id_code_to_json(id_code));
  ordered_json out;
  out["M_prime"] = id_code.id.m_count();
  out["N_prime"] = id_code.id.n_count();
  out["simultaneity_pass"] = sim.pass;
  out["max_decomposition_deviation"] = sim.max_decomposition_deviation;
  emit(opts, out,
       "sim-id code with M' = " + std::to_string(id_code.id.m_count()) +
           ", N' = " + std::to_string(id_code.id.n_count()) + " -> " + out_path + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// derandomize
// ---------------------------------------------------------------------------

int run_derandomize(const GlobalOptions& opts, const std::string& code_path,
                    const std::string& mode, const std::string& channel_path,
                    const std::string& out_path) {
  const ccq::LoadedCode loaded = ccq::code_from_json(ccq::read_text_file(code_path), opts.tol);
  if (!std::holds_alternative<ccq::DeterministicCode>(loaded)) {
    throw ccq::ParameterError("derandomize needs a deterministic code (codewords_x form)");
  }
  const ccq::DeterministicCode& code = std::get<ccq::DeterministicCode>(loaded);
  ccq::StochasticTransmissionCode converted =
      mode == "literal" ? ccq::derandomize_literal(code) : ccq::derandomize_pointmass(code);
  ccq::write_text_file(out_path, ccq::code_to_json(converted));
  ordered_json out;
  out["mode"] = mode;
  out["M"] = converted.m_count();
  out["N"] = converted.n_count();
  std::string text = mode + " derandomization -> " + out_path + "\n";
  if (!channel_path.empty()) {
    // The two conversions trade differently: point masses preserve the
    // deterministic errors while the uniform-codebook encoders typically do
    // not. Report both figures next to the source averages.
    const ccq::ChannelSpec spec = ccq::channel_spec_from_json(ccq::read_text_file(channel_path));
    const ccq::BlockChannel ch = ccq::BlockChannel::memoryless(spec.build(opts.tol), code.k);
    const double e_literal = ccq::max_error(ccq::derandomize_literal(code), ch).value;
    const double e_point = ccq::max_error(ccq::derandomize_pointmass(code), ch).value;
    const double ebar_source = ccq::avg_error(code, ch).value;
    out["e_literal"] = e_literal;
    out["e_pointmass"] = e_point;
    out["e_bar_source"] = ebar_source;
    text += "  e(literal)    = " + std::to_string(e_literal) + "\n";
    text += "  e(pointmass)  = " + std::to_string(e_point) + "\n";
    text += "  e_bar(source) = " + std::to_string(ebar_source) + "\n";
  }
  emit(opts, out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// random-code
// ---------------------------------------------------------------------------

int run_random_code(const GlobalOptions& opts, const std::string& channel_path, int m, int n,
                    int k, std::uint64_t seed, const std::string& mode,
                    const std::string& out_path) {
  const ccq::ChannelSpec spec = ccq::channel_spec_from_json(ccq::read_text_file(channel_path));
  const ccq::BlockChannel ch = ccq::BlockChannel::memoryless(spec.build(opts.tol), k);
  std::string payload;
  if (mode == "point") {
    // Point-mass codes are written in the deterministic (codeword) form so
    // they can feed `derandomize` directly.
    payload = ccq::code_to_json(ccq::generate_random_deterministic_code(ch, m, n, seed));
  } else {
    payload = ccq::code_to_json(
        ccq::generate_random_code(ch, m, n, seed, ccq::EncoderMode::kRandomSupport));
  }
  ccq::write_text_file(out_path, payload);
  ordered_json out;
  out["M"] = m;
  out["N"] = n;
  out["k"] = k;
  out["mode"] = mode;
  emit(opts, out,
       "random " + mode + " code (M=" + std::to_string(m) + ", N=" + std::to_string(n) +
           ", k=" + std::to_string(k) + ") -> " + out_path + "\n");
  return 0;
}

// ---------------------------------------------------------------------------
// run
// ---------------------------------------------------------------------------

int run_run(const GlobalOptions& opts, const std::string& config_path,
            std::string out_dir) {
  const std::string base_dir = std::filesystem::path(config_path).parent_path().string();
  ccq::ExperimentConfig config =
      ccq::ExperimentConfig::from_json(ccq::read_text_file(config_path), base_dir);
  if (opts.tol != ccq::kDefaultTol) {
    config.tol = opts.tol;
  }
  if (out_dir.empty()) {
    if (!config.out_dir.has_value()) {
      throw ccq::ParameterError("no output directory: pass --out-dir or set out_dir in the config");
    }
    out_dir = *config.out_dir;
  }
  std::filesystem::create_directories(out_dir);

  ccq::ExperimentResult result;
  try {
    result = ccq::run_experiment(config);
  } catch (const ccq::Error& e) {
    ordered_json failure;
    failure["error"] = e.what();
    failure["exit_code"] = static_cast<int>(e.exit_code());
    ccq::write_text_file(out_dir + "/failure.json", failure.dump(2) + "\n");
    throw;
  }

  ccq::write_text_file(out_dir + "/report.json", result.report.to_json());
  ccq::write_text_file(out_dir + "/summary.csv",
                       ccq::ExperimentReport::csv_header() + result.report.to_csv_row());
  ccq::write_text_file(out_dir + "/code.json",
                       result.deterministic_code.has_value()
                           ? ccq::code_to_json(*result.deterministic_code)
                           : ccq::code_to_json(result.code));
  ccq::write_text_file(out_dir + "/family_a.json",
                       ccq::family_to_json(result.report.fam_a.family));
  ccq::write_text_file(out_dir + "/family_b.json",
                       ccq::family_to_json(result.report.fam_b.family));
  ccq::write_text_file(out_dir + "/id_code.json", ccq::sim_id_code_to_json(result.id_code));

  bool all_pass = true;
  for (const ccq::BoundCheck& c : result.report.checks) {
    all_pass = all_pass && c.pass;
  }
  std::string text = "experiment complete -> " + out_dir + "\n";
  text +=
      "  e = " + std::to_string(result.report.e) + ", e1 = " + std::to_string(result.report.e1);
  if (result.report.e2.has_value()) {
    text += ", e2 = " + std::to_string(*result.report.e2);
  }
  text += "\n  bound checks: " + std::string(all_pass ? "all pass" : "FAILURES") + "\n";
  if (!result.report.lober_holds) {
    text += "  warning: feasibility condition fails for lambda = " +
            std::to_string(config.lambda) + "; the size guarantee does not apply\n";
  }
  emit(opts, ordered_json::parse(result.report.to_json()), text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact simulator and code-construction toolkit for two-sender"
      " classical-quantum channels"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--tol", opts.tol, "validation tolerance override");
  app.add_flag("--json", opts.json, "emit machine-readable JSON on stdout");
  app.add_flag("--quiet", opts.quiet, "suppress non-error output");

  std::string file;
  auto* validate = app.add_subcommand("validate", "validate a channel/code/family file");
  validate->add_option("file", file)->required();

  std::string code_path;
  std::string channel_path;
  auto* eval = app.add_subcommand("eval-error", "evaluate error functionals of a code");
  eval->add_option("--code", code_path)->required();
  eval->add_option("--channel", channel_path)->required();

  int m = 0;
  int n = 0;
  int k = 1;
  double lambda = 0.0;
  double epsilon = 0.0;
  int target = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  auto* family = app.add_subcommand("build-family", "build a constant-weight subset family");
  family->add_option("--M", m)->required();
  family->add_option("--lambda", lambda)->required();
  family->add_option("--epsilon", epsilon)->required();
  family->add_option("--target", target)->required();
  family->add_option("--seed", seed)->required();
  family->add_option("--out", out_path)->required();

  std::string family_a_path;
  std::string family_b_path;
  auto* id_code =
      app.add_subcommand("build-id-code", "turn a transmission code into a simultaneous ID code");
  id_code->add_option("--code", code_path)->required();
  id_code->add_option("--family-a", family_a_path)->required();
  id_code->add_option("--family-b", family_b_path)->required();
  id_code->add_option("--out", out_path)->required();

  std::string mode = "literal";
  std::string derandomize_channel;
  auto* derandomize =
      app.add_subcommand("derandomize", "turn a deterministic code into a stochastic one");
  derandomize->add_option("--code", code_path)->required();
  derandomize->add_option("--mode", mode)->check(CLI::IsMember({"literal", "pointmass"}));
  derandomize->add_option("--channel", derandomize_channel,
                          "evaluate both conversions against this channel");
  derandomize->add_option("--out", out_path)->required();

  std::string encoder_mode = "point";
  auto* random_code = app.add_subcommand("random-code", "generate a seeded random code");
  random_code->add_option("--channel", channel_path)->required();
  random_code->add_option("--M", m)->required();
  random_code->add_option("--N", n)->required();
  random_code->add_option("--k", k)->required();
  random_code->add_option("--seed", seed)->required();
  random_code->add_option("--mode", encoder_mode)->check(CLI::IsMember({"point", "support"}));
  random_code->add_option("--out", out_path)->required();

  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "run a full experiment from a config file");
  run->add_option("--config", config_path)->required();
  run->add_option("--out-dir", out_dir, "output directory (defaults to the config's out_dir)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      return run_validate(opts, file);
    }
    if (eval->parsed()) {
      return run_eval_error(opts, code_path, channel_path);
    }
    if (family->parsed()) {
      return run_build_family(opts, m, lambda, epsilon, target, seed, out_path);
    }
    if (id_code->parsed()) {
      return run_build_id_code(opts, code_path, family_a_path, family_b_path, out_path);
    }
    if (derandomize->parsed()) {
      return run_derandomize(opts, code_path, mode, derandomize_channel, out_path);
    }
    if (random_code->parsed()) {
      return run_random_code(opts, channel_path, m, n, k, seed, encoder_mode, out_path);
    }
    if (run->parsed()) {
      return run_run(opts, config_path, out_dir);
    }
  } catch (const ccq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.exit_code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::kNumericalFailure);
  }
  return 0;
}
