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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccq/construction.hpp"
#include "ccq/json_io.hpp"

namespace ccq {

enum class EncoderMode { kPointMass, kRandomSupport };

// One experiment: channel, block length, code sizes, the achievability-proof
// parameters (epsilon_1, epsilon_2, delta, lambda), and the seed that drives
// every randomized step.
struct ExperimentConfig {
  std::string channel_json;  // resolved channel spec (inline JSON object)
  int k = 1;
  int m_count = 4;
  int n_count = 4;
  double lambda = 0.5;
  double epsilon1 = 0.25;
  double epsilon2 = 0.8;
  double delta = 0.1;
  std::optional<double> epsilon_override;  // family parameter; min{eps1, eps2/4} if absent
  std::uint64_t seed = 0;
  int target_m_prime = 0;  // 0 = max(2, guaranteed-count bound)
  int target_n_prime = 0;
  EncoderMode encoder_mode = EncoderMode::kPointMass;
  std::optional<std::string> code_json;  // optional explicit transmission code
  std::optional<std::string> out_dir;    // default output directory for `run`
  double tol = kDefaultTol;

  /// Parses a config file; a "channel" string is resolved as a path relative
  /// to base_dir, an object is taken inline. "seed" is mandatory.
  static ExperimentConfig from_json(const std::string& text, const std::string& base_dir);
  std::string to_json() const;
};

struct BoundCheck {
  std::string name;
  bool applicable = true;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
};

struct ExperimentReport {
  ExperimentConfig config;
  std::string channel_kind;
  int nx = 0;
  int ny = 0;
  int dim = 0;

  double e = 0.0;      // maximal transmission error
  double e_bar = 0.0;  // average transmission error
  double epsilon = 0.0;
  bool lober_holds = false;

  FamilyBuildResult fam_a;
  FamilyBuildResult fam_b;

  int m_prime = 0;
  int n_prime = 0;
  double e1 = 0.0;
  std::optional<double> e2;       // absent when M'*N' < 2
  std::optional<double> eps_fam;  // absent when M'*N' < 2
  SimultaneityReport simultaneity;

  RatePoint transmission_rate;
  std::optional<RatePoint> id_rate;  // absent when M' or N' < 2
  GrowthReport growth_m;
  GrowthReport growth_n;

  std::vector<BoundCheck> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  std::string to_json(bool include_timings = true) const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

struct ExperimentResult {
  ExperimentReport report;
  StochasticTransmissionCode code;
  std::optional<DeterministicCode> deterministic_code;  // set in point-mass mode
  SimultaneousIdCode id_code;
};

/// Seeded codebook over the channel: distinct codeword pairs, decoder from
/// the square-root measurement on the induced average output states.
DeterministicCode generate_random_deterministic_code(const BlockChannel& ch, int m_count,
                                                     int n_count, std::uint64_t seed);
StochasticTransmissionCode generate_random_code(const BlockChannel& ch, int m_count, int n_count,
                                                std::uint64_t seed,
                                                EncoderMode mode = EncoderMode::kPointMass);

/// The full pipeline: channel -> code -> errors -> families -> simultaneous
/// ID code -> ID errors -> bound checks -> rates and growth bookkeeping.
/// Failures carry a "stage <name>:" prefix in the message.
ExperimentResult run_experiment(const ExperimentConfig& config);

}  // namespace ccq
