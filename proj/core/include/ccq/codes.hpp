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

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ccq/channel.hpp"
#include "ccq/operators.hpp"

namespace ccq {

// A message encoded as a probability distribution over input words rather
// than a single word. Support words are distinct; probabilities sum to 1
// within 1e-12.
class StochasticEncoder {
 public:
  StochasticEncoder(int k, Alphabet alphabet, std::vector<std::pair<Word, double>> support);
  static StochasticEncoder point_mass(Alphabet alphabet, Word w);

  int k() const { return k_; }
  Alphabet alphabet() const { return alphabet_; }
  const std::vector<std::pair<Word, double>>& support() const { return support_; }

  /// Probability of a word, 0 off support (used by dense-sum oracles).
  double probability_of(const Word& w) const;

 private:
  int k_;
  Alphabet alphabet_;
  std::vector<std::pair<Word, double>> support_;
};

/// Codebook with one fixed word per message and a decoding POVM whose
/// M*N effects are indexed row-major over (m, n).
struct DeterministicCode {
  int k = 0;
  std::vector<Word> codewords_x;
  std::vector<Word> codewords_y;
  Povm decoder;

  int m_count() const { return static_cast<int>(codewords_x.size()); }
  int n_count() const { return static_cast<int>(codewords_y.size()); }
};

/// Transmission code with stochastic encoders and a decoding POVM.
struct StochasticTransmissionCode {
  int k = 0;
  std::vector<StochasticEncoder> encoders_x;
  std::vector<StochasticEncoder> encoders_y;
  Povm decoder;

  int m_count() const { return static_cast<int>(encoders_x.size()); }
  int n_count() const { return static_cast<int>(encoders_y.size()); }
};

/// Identification code: per-message-pair yes/no tests. The effects need not
/// be complete, only 0 <= I_mn <= identity; indexed row-major over (m, n).
struct IdCode {
  int k = 0;
  std::vector<StochasticEncoder> encoders_x;
  std::vector<StochasticEncoder> encoders_y;
  std::vector<PovmEffect> effects;

  int m_count() const { return static_cast<int>(encoders_x.size()); }
  int n_count() const { return static_cast<int>(encoders_y.size()); }
  const PovmEffect& effect(int m, int n) const {
    return effects[static_cast<std::size_t>(m) * n_count() + n];
  }
};

/// An ID code whose tests all derive from one underlying POVM (E_rs) via
/// subset sums, so a single measurement answers every identification
/// question at once.
struct SimultaneousIdCode {
  IdCode id;
  Povm underlying;  // R*S effects, row-major over (r, s)
  int r_count = 0;
  int s_count = 0;
  std::vector<std::vector<int>> subsets_a;  // 0-based into [R], one per m
  std::vector<std::vector<int>> subsets_b;  // 0-based into [S], one per n
};

/// One evaluated message pair: (sender m, sender n, tested m', tested n').
/// For first-kind and transmission errors the tested pair equals the sender.
struct PairError {
  std::array<int, 4> indices;
  double value;
};

struct ErrorReport {
  double value = 0.0;                               // in [0, 1]
  std::vector<std::array<int, 4>> argmax;           // pairs attaining value
  std::optional<std::vector<PairError>> per_pair;   // full table for max-type errors
};

/// Average channel output of an encoder pair: sum of P(x^k) Q(y^k)
/// W^k(x^k, y^k) over the supports. Exact; off-support terms vanish.
ComplexMatrix average_block_output(const BlockChannel& ch, const StochasticEncoder& px,
                                   const StochasticEncoder& qy);

/// Worst-case transmission error: max over (m, n) of the misdecoding
/// probability 1 - sum P_m Q_n tr(D_mn W^k).
ErrorReport max_error(const StochasticTransmissionCode& code, const BlockChannel& ch);

/// Uniform average over (m, n) of the per-pair misdecoding probability.
ErrorReport avg_error(const StochasticTransmissionCode& code, const BlockChannel& ch);
ErrorReport avg_error(const DeterministicCode& code, const BlockChannel& ch);

/// Missed identification of the true pair: max over (m, n) of
/// 1 - sum P_m Q_n tr(I_mn W^k).
ErrorReport id_error_first(const IdCode& code, const BlockChannel& ch);

/// False identification: max over ordered conflicting pairs
/// (m, n) != (m', n') of sum P_m Q_n tr(I_m'n' W^k).
ErrorReport id_error_second(const IdCode& code, const BlockChannel& ch);

struct SimultaneityReport {
  double completeness_deviation = 0.0;        // of the underlying POVM
  double max_decomposition_deviation = 0.0;   // worst ||I_mn - sum E_ij||_max
  std::vector<double> per_effect_deviation;   // row-major over (m, n)
  int worst_m = -1;
  int worst_n = -1;
  double decomposition_tol = 1e-12;
  double completeness_tol = kDefaultTol;
  bool pass = false;
};

/// Checks that every test decomposes exactly into the claimed subset sums of
/// the underlying POVM, and that the POVM is complete.
SimultaneityReport verify_simultaneous(const SimultaneousIdCode& code,
                                       double decomposition_tol = 1e-12,
                                       double completeness_tol = kDefaultTol);

}  // namespace ccq
