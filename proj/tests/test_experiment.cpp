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

#include "ccq/experiment.hpp"

#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "ccq/errors.hpp"

using namespace ccq;

namespace {

constexpr const char* kDepol02 = R"({"kind": "depolarizing", "p": 0.2, "nx": 2, "ny": 2})";
constexpr const char* kNoiseless44 = R"({"kind": "depolarizing", "p": 0.0, "nx": 4, "ny": 4})";

ExperimentConfig base_config() {
  ExperimentConfig config;
  config.channel_json = kDepol02;
  config.k = 2;
  config.m_count = 4;
  config.n_count = 4;
  config.lambda = 0.5;
  config.epsilon1 = 0.25;
  config.epsilon2 = 0.8;
  config.delta = 0.1;
  config.seed = 17;
  return config;
}

}  // namespace

TEST_CASE("config parsing applies defaults and requires a seed") {
  const std::string text =
      R"({"channel": {"kind": "depolarizing", "p": 0.1, "nx": 2, "ny": 2}, "seed": 5, "k": 2})";
  const ExperimentConfig config = ExperimentConfig::from_json(text, "");
  CHECK(config.seed == 5);
  CHECK(config.k == 2);
  CHECK(config.m_count == 4);
  CHECK(config.encoder_mode == EncoderMode::kPointMass);
  CHECK(!config.epsilon_override.has_value());

  CHECK_THROWS_AS(ExperimentConfig::from_json(R"({"seed": 1})", ""), ValidationError);
  CHECK_THROWS_AS(
      ExperimentConfig::from_json(
          R"({"channel": {"kind": "depolarizing", "p": 0, "nx": 2, "ny": 2}})", ""),
      ValidationError);
  CHECK_THROWS_AS(
      ExperimentConfig::from_json(
          R"({"channel": {"kind": "depolarizing", "p": 0, "nx": 2, "ny": 2},
             "seed": 1, "lambda": 1.5})",
          ""),
      ParameterError);
  CHECK_THROWS_AS(
      ExperimentConfig::from_json(
          R"({"channel": {"kind": "depolarizing", "p": 0, "nx": 2, "ny": 2},
             "seed": 1, "encoder_mode": "telepathy"})",
          ""),
      ValidationError);
}

TEST_CASE("random codes are reproducible from the seed") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 2);
  const std::string a = code_to_json(generate_random_code(ch, 3, 4, 99));
  const std::string b = code_to_json(generate_random_code(ch, 3, 4, 99));
  const std::string c = code_to_json(generate_random_code(ch, 3, 4, 100));
  CHECK(a == b);
  CHECK(a != c);

  const std::string s1 =
      code_to_json(generate_random_code(ch, 3, 4, 99, EncoderMode::kRandomSupport));
  const std::string s2 =
      code_to_json(generate_random_code(ch, 3, 4, 99, EncoderMode::kRandomSupport));
  CHECK(s1 == s2);
}

TEST_CASE("point-mass codes on noiseless channels decode perfectly") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.0, 2, 2), 2);
  const StochasticTransmissionCode code = generate_random_code(ch, 4, 4, 5);
  CHECK(max_error(code, ch).value <= 1e-9);
}

TEST_CASE("fully depolarized channels leave only the symmetry guess") {
  // Every output is the maximally mixed state, so the square-root measurement
  // splits the identity evenly and each pair succeeds with probability
  // 1/(M*N).
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(1.0, 2, 2), 1);
  const StochasticTransmissionCode code = generate_random_code(ch, 2, 2, 5);
  CHECK(max_error(code, ch).value == doctest::Approx(0.75).epsilon(1e-11));
}

TEST_CASE("requesting more codewords than exist is a parameter error") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 1);
  CHECK_THROWS_AS(generate_random_code(ch, 3, 2, 5), ParameterError);
}

TEST_CASE("the full pipeline on a noiseless channel is errorless") {
  ExperimentConfig config = base_config();
  config.channel_json = kNoiseless44;
  config.k = 1;
  const ExperimentResult result = run_experiment(config);
  const ExperimentReport& report = result.report;

  CHECK(report.e <= 1e-9);
  CHECK(report.e1 <= 1e-9);
  REQUIRE(report.e2.has_value());
  REQUIRE(report.eps_fam.has_value());
  // On a noiseless channel the false-identification probability is exactly
  // the family overlap ratio.
  CHECK(std::abs(*report.e2 - *report.eps_fam) <= 1e-9);
  CHECK(report.simultaneity.pass);
  for (const BoundCheck& check : report.checks) {
    CHECK(check.pass);
  }
}

TEST_CASE("reports are byte-identical across repeated runs") {
  const ExperimentConfig config = base_config();
  const ExperimentResult a = run_experiment(config);
  const ExperimentResult b = run_experiment(config);
  CHECK(a.report.to_json(false) == b.report.to_json(false));
  CHECK(a.report.to_csv_row() == b.report.to_csv_row());

  ExperimentConfig other = config;
  other.seed = 18;
  const ExperimentResult c = run_experiment(other);
  CHECK(a.report.to_csv_row() != c.report.to_csv_row());
}

TEST_CASE("every reported check re-verifies from its own raw values") {
  ExperimentConfig config = base_config();
  config.epsilon_override = 0.4;
  const ExperimentResult result = run_experiment(config);
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(result.report.to_json());
  for (const auto& check : j.at("checks")) {
    if (!check.at("applicable").get<bool>()) {
      continue;
    }
    const double lhs = check.at("lhs").get<double>();
    const double rhs = check.at("rhs").get<double>();
    const double margin = check.at("margin").get<double>();
    CHECK(check.at("pass").get<bool>() == (lhs <= rhs));
    CHECK(margin == doctest::Approx(rhs - lhs).epsilon(1e-15));
  }
  // The headline inequalities recompute from the reported errors.
  const double e = j.at("transmission").at("e").get<double>();
  const double e1 = j.at("id").at("e1").get<double>();
  const double e2 = j.at("id").at("e2").get<double>();
  const double eps_fam = j.at("id").at("eps_fam").get<double>();
  const double tol = j.at("config").at("tol").get<double>();
  CHECK(e1 <= e + tol);
  CHECK(e2 <= eps_fam + 3.0 * e + tol);
}

TEST_CASE("loaded codes replace the generated ones") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 2);
  ExperimentConfig config = base_config();
  config.code_json = code_to_json(generate_random_deterministic_code(ch, 4, 4, 123));
  const ExperimentResult result = run_experiment(config);
  REQUIRE(result.deterministic_code.has_value());
  CHECK(code_to_json(*result.deterministic_code) == *config.code_json);

  config.m_count = 2;  // disagrees with the loaded code
  CHECK_THROWS_AS(run_experiment(config), ParameterError);
}

TEST_CASE("stage failures carry their stage tag") {
  ExperimentConfig config = base_config();
  config.channel_json = R"({"kind": "warp", "nx": 2, "ny": 2})";
  try {
    run_experiment(config);
    FAIL("expected a stage failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("stage channel") == 0);
    CHECK(e.exit_code() == ExitCode::kValidationFailure);
  }

  config = base_config();
  config.m_count = 64;  // more codewords than binary words of length 2
  try {
    run_experiment(config);
    FAIL("expected a stage failure");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("stage code") == 0);
    CHECK(e.exit_code() == ExitCode::kParameterError);
  }
}

TEST_CASE("lober feasibility is recorded without stopping the run") {
  ExperimentConfig config = base_config();  // lambda = 0.5 never satisfies the condition
  const ExperimentResult result = run_experiment(config);
  CHECK(!result.report.lober_holds);

  ExperimentConfig feasible = base_config();
  feasible.m_count = 8;
  feasible.n_count = 8;
  feasible.k = 3;
  feasible.lambda = 0.13;
  feasible.epsilon_override = 0.8;
  const ExperimentResult r2 = run_experiment(feasible);
  CHECK(r2.report.lober_holds);
}

TEST_CASE("csv rows follow the fixed column order") {
  const std::string header = ExperimentReport::csv_header();
  CHECK(header ==
        "k,M,N,M_prime,N_prime,e,e_bar,e1,e2,eps_fam,r1,r2,id_r1,id_r2,"
        "check_first_kind,check_second_kind,check_four_epsilon,check_growth_m,"
        "check_growth_n,lober_condition\n");
  const ExperimentResult result = run_experiment(base_config());
  const std::string row = result.report.to_csv_row();
  std::size_t commas = 0;
  for (char c : row) {
    commas += c == ',';
  }
  CHECK(commas == 19);
}
