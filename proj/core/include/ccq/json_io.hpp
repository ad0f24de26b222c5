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

#include <string>
#include <variant>
#include <vector>

#include "ccq/channel.hpp"
#include "ccq/codes.hpp"
#include "ccq/subset_family.hpp"

namespace ccq {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Parametric channel description mirroring the channel file format. Keeping
// the parametric form around lets tools re-emit files without expanding
// depolarizing/classical channels into state tables.
struct ChannelSpec {
  enum class Kind { kCcqTable, kDepolarizing, kClassical };
  Kind kind = Kind::kDepolarizing;
  int nx = 0;
  int ny = 0;
  // kCcqTable
  int dim = 0;
  std::vector<ComplexMatrix> states;  // x * ny + y
  // kDepolarizing
  double p = 0.0;
  // kClassical
  std::vector<std::vector<double>> rows;  // x * ny + y

  CcqChannel build(double tol = kDefaultTol) const;
  std::string kind_name() const;
};

ChannelSpec channel_spec_from_json(const std::string& text);
std::string channel_spec_to_json(const ChannelSpec& spec);

using LoadedCode = std::variant<StochasticTransmissionCode, DeterministicCode>;

LoadedCode code_from_json(const std::string& text, double tol = kDefaultTol);
std::string code_to_json(const StochasticTransmissionCode& code);
std::string code_to_json(const DeterministicCode& code);

/// Deterministic codes evaluate as their point-mass stochastic form.
StochasticTransmissionCode as_stochastic(const LoadedCode& code);

SimultaneousIdCode sim_id_code_from_json(const std::string& text, double tol = kDefaultTol);
std::string sim_id_code_to_json(const SimultaneousIdCode& code);

SubsetFamily family_from_json(const std::string& text);
std::string family_to_json(const SubsetFamily& family);

/// Construction metadata: counts, log2-domain bounds, shortfall flag, seed.
std::string family_build_report_to_json(const FamilyBuildResult& result);

}  // namespace ccq
