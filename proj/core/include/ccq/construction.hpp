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
#include <vector>

#include "ccq/codes.hpp"
#include "ccq/subset_family.hpp"

namespace ccq {

/// Uniform mixture (1/|A|) sum_{i in A} P_i of the selected encoders. The
/// support is the union of member supports.
StochasticEncoder mix_encoders(const std::vector<StochasticEncoder>& encoders,
                               const std::vector<int>& subset);

/// Turns a transmission code into a simultaneous ID code: message m' of the
/// first sender is the mixture of the transmission encoders in A_m', the test
/// for (m', n') is the subset sum of decoder effects over A_m' x B_n', and the
/// decoder itself is the underlying POVM. Families must cover [M] and [N].
SimultaneousIdCode construct_sim_id_code(const StochasticTransmissionCode& code,
                                         const SubsetFamily& fam_a, const SubsetFamily& fam_b);

/// Stochastic code with every encoder uniform over the whole codebook
/// (P_m = uniform over {x_1..x_M} for every m); the decoder is unchanged.
/// Requires distinct codewords so the uniform mass is well-defined.
StochasticTransmissionCode derandomize_literal(const DeterministicCode& code);

/// Stochastic code with point-mass encoders at the codewords; preserves both
/// the maximal and the average error of the deterministic code.
StochasticTransmissionCode derandomize_pointmass(const DeterministicCode& code);

struct RatePoint {
  enum class Kind { kTransmission, kSimultaneousId };
  double r1 = 0.0;  // bits per channel use
  double r2 = 0.0;
  double delta = 0.0;
  Kind kind = Kind::kTransmission;
};

/// ((1/k) log2 M, (1/k) log2 N).
RatePoint transmission_rate_pair(int k, int m_count, int n_count);

/// ((1/k) log2 log2 M, (1/k) log2 log2 N); counts must exceed 1 for the
/// double logarithm to be defined.
RatePoint id_rate_pair(int k, int m_count, int n_count);

struct GrowthReport {
  int k = 0;
  double rate = 0.0;
  double delta = 0.0;
  double lambda = 0.0;
  double log2_m = 0.0;
  double log2_m_prime = 0.0;
  double lemma_bound_log2 = 0.0;  // floor(lambda * M) - log2 M
  double paper_bound_log2 = 0.0;  // lambda * 2^{k(rate - delta)} - k
  bool lemma_bound_met = false;
  bool paper_bound_met = false;
  std::string precision_note;  // set when the floor left the exact-integer range
};

/// Checks the doubly-exponential growth bookkeeping in the log2 domain:
/// log2 M' >= floor(lambda*M) - log2 M, and whether the rate-form lower bound
/// lambda * 2^{k(rate - delta)} - k is met as well.
GrowthReport growth_check(int k, double rate, double delta, double lambda, double log2_m_prime,
                          double log2_m);

}  // namespace ccq
