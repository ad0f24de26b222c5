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

#include "ccq/codes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "ccq/errors.hpp"

namespace ccq {

namespace {

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Memoizes W^k over the distinct support words seen during one evaluation;
// mixed encoders repeat words heavily.
class BlockOutputCache {
 public:
  explicit BlockOutputCache(const BlockChannel& ch) : ch_(ch) {}

  const ComplexMatrix& output(const Word& xk, const Word& yk) {
    const std::string key = word_to_string(xk) + "|" + word_to_string(yk);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, ch_.evaluate(xk, yk).matrix()).first;
    }
    return it->second;
  }

 private:
  const BlockChannel& ch_;
  std::unordered_map<std::string, ComplexMatrix> cache_;
};

ComplexMatrix average_output(const StochasticEncoder& px, const StochasticEncoder& qy,
                             BlockOutputCache& cache, int dim) {
  ComplexMatrix avg(dim, dim);
  for (const auto& [xw, p] : px.support()) {
    for (const auto& [yw, q] : qy.support()) {
      const double weight = p * q;
      if (weight == 0.0) {
        continue;
      }
      const ComplexMatrix& rho = cache.output(xw, yw);
      for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
          avg(i, j) += weight * rho(i, j);
        }
      }
    }
  }
  return avg;
}

void check_code_shape(int k, int m_count, int n_count, std::size_t effect_count, int effect_dim,
                      const BlockChannel& ch) {
  if (k != ch.k()) {
    throw ParameterError("code block length " + std::to_string(k) +
                         " does not match channel block length " + std::to_string(ch.k()));
  }
  if (m_count < 1 || n_count < 1) {
    throw ParameterError("code needs at least one encoder per sender");
  }
  if (effect_count != static_cast<std::size_t>(m_count) * n_count) {
    throw ParameterError("decoder must hold M*N effects, got " + std::to_string(effect_count));
  }
  if (effect_dim != ch.block_dim()) {
    throw ParameterError("effect dimension " + std::to_string(effect_dim) +
                         " does not match channel block dimension " +
                         std::to_string(ch.block_dim()));
  }
}

// Average output states for every (m, n), row-major.
std::vector<ComplexMatrix> all_average_outputs(const std::vector<StochasticEncoder>& encs_x,
                                               const std::vector<StochasticEncoder>& encs_y,
                                               const BlockChannel& ch) {
  BlockOutputCache cache(ch);
  std::vector<ComplexMatrix> avg;
  avg.reserve(encs_x.size() * encs_y.size());
  for (const StochasticEncoder& px : encs_x) {
    if (px.k() != ch.k()) {
      throw ParameterError("encoder block length does not match channel");
    }
    for (const StochasticEncoder& qy : encs_y) {
      avg.push_back(average_output(px, qy, cache, ch.block_dim()));
    }
  }
  return avg;
}

ErrorReport max_type_report(std::vector<PairError> pairs) {
  ErrorReport report;
  for (PairError& p : pairs) {
    p.value = clamp01(p.value);
    report.value = std::max(report.value, p.value);
  }
  for (const PairError& p : pairs) {
    if (p.value == report.value) {
      report.argmax.push_back(p.indices);
    }
  }
  report.per_pair = std::move(pairs);
  return report;
}

}  // namespace

StochasticEncoder::StochasticEncoder(int k, Alphabet alphabet,
                                     std::vector<std::pair<Word, double>> support)
    : k_(k), alphabet_(alphabet), support_(std::move(support)) {
  if (k_ < 1 || alphabet_.size < 1) {
    throw ParameterError("encoder needs k >= 1 and alphabet size >= 1");
  }
  if (support_.empty()) {
    throw ParameterError("encoder support must be non-empty");
  }
  double sum = 0.0;
  std::set<Word> seen;
  for (const auto& [w, p] : support_) {
    if (static_cast<int>(w.size()) != k_) {
      throw ValidationError("encoder word length " + std::to_string(w.size()) +
                            " does not match k = " + std::to_string(k_));
    }
    for (int letter : w) {
      if (letter < 0 || letter >= alphabet_.size) {
        throw ValidationError("encoder letter " + std::to_string(letter) + " out of range");
      }
    }
    if (p < 0.0) {
      throw ValidationError("encoder probability " + std::to_string(p) + " is negative");
    }
    if (!seen.insert(w).second) {
      throw ValidationError("encoder support repeats word " + word_to_string(w));
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError("encoder probabilities sum to " + std::to_string(sum) +
                          ", not 1 within 1e-12");
  }
}

StochasticEncoder StochasticEncoder::point_mass(Alphabet alphabet, Word w) {
  const int k = static_cast<int>(w.size());
  return StochasticEncoder(k, alphabet, {{std::move(w), 1.0}});
}

double StochasticEncoder::probability_of(const Word& w) const {
  for (const auto& [word, p] : support_) {
    if (word == w) {
      return p;
    }
  }
  return 0.0;
}

ComplexMatrix average_block_output(const BlockChannel& ch, const StochasticEncoder& px,
                                   const StochasticEncoder& qy) {
  BlockOutputCache cache(ch);
  return average_output(px, qy, cache, ch.block_dim());
}

ErrorReport max_error(const StochasticTransmissionCode& code, const BlockChannel& ch) {
  check_code_shape(code.k, code.m_count(), code.n_count(), code.decoder.size(),
                   code.decoder.dim(), ch);
  const std::vector<ComplexMatrix> avg = all_average_outputs(code.encoders_x, code.encoders_y, ch);
  std::vector<PairError> pairs;
  for (int m = 0; m < code.m_count(); ++m) {
    for (int n = 0; n < code.n_count(); ++n) {
      const std::size_t idx = static_cast<std::size_t>(m) * code.n_count() + n;
      const double success = real_inner_trace(code.decoder.effect(idx).matrix(), avg[idx]);
      pairs.push_back({{m, n, m, n}, 1.0 - success});
    }
  }
  return max_type_report(std::move(pairs));
}

ErrorReport avg_error(const StochasticTransmissionCode& code, const BlockChannel& ch) {
  check_code_shape(code.k, code.m_count(), code.n_count(), code.decoder.size(),
                   code.decoder.dim(), ch);
  const std::vector<ComplexMatrix> avg = all_average_outputs(code.encoders_x, code.encoders_y, ch);
  double success_sum = 0.0;
  for (std::size_t idx = 0; idx < avg.size(); ++idx) {
    success_sum += real_inner_trace(code.decoder.effect(idx).matrix(), avg[idx]);
  }
  ErrorReport report;
  report.value = clamp01(1.0 - success_sum / static_cast<double>(avg.size()));
  return report;
}

ErrorReport avg_error(const DeterministicCode& code, const BlockChannel& ch) {
  check_code_shape(code.k, code.m_count(), code.n_count(), code.decoder.size(),
                   code.decoder.dim(), ch);
  BlockOutputCache cache(ch);
  double success_sum = 0.0;
  for (int m = 0; m < code.m_count(); ++m) {
    for (int n = 0; n < code.n_count(); ++n) {
      const std::size_t idx = static_cast<std::size_t>(m) * code.n_count() + n;
      success_sum += real_inner_trace(code.decoder.effect(idx).matrix(),
                                      cache.output(code.codewords_x[m], code.codewords_y[n]));
    }
  }
  ErrorReport report;
  report.value = clamp01(1.0 - success_sum / (code.m_count() * code.n_count()));
  return report;
}

ErrorReport id_error_first(const IdCode& code, const BlockChannel& ch) {
  check_code_shape(code.k, code.m_count(), code.n_count(), code.effects.size(),
                   code.effects.front().dim(), ch);
  const std::vector<ComplexMatrix> avg = all_average_outputs(code.encoders_x, code.encoders_y, ch);
  std::vector<PairError> pairs;
  for (int m = 0; m < code.m_count(); ++m) {
    for (int n = 0; n < code.n_count(); ++n) {
      const std::size_t idx = static_cast<std::size_t>(m) * code.n_count() + n;
      const double accept = real_inner_trace(code.effect(m, n).matrix(), avg[idx]);
      pairs.push_back({{m, n, m, n}, 1.0 - accept});
    }
  }
  return max_type_report(std::move(pairs));
}

ErrorReport id_error_second(const IdCode& code, const BlockChannel& ch) {
  check_code_shape(code.k, code.m_count(), code.n_count(), code.effects.size(),
                   code.effects.front().dim(), ch);
  if (code.m_count() * code.n_count() < 2) {
    throw ParameterError("second-kind error is undefined for a single message pair");
  }
  const std::vector<ComplexMatrix> avg = all_average_outputs(code.encoders_x, code.encoders_y, ch);
  std::vector<PairError> pairs;
  for (int m = 0; m < code.m_count(); ++m) {
    for (int n = 0; n < code.n_count(); ++n) {
      const std::size_t sender = static_cast<std::size_t>(m) * code.n_count() + n;
      for (int a = 0; a < code.m_count(); ++a) {
        for (int b = 0; b < code.n_count(); ++b) {
          if (a == m && b == n) {
            continue;
          }
          const double accept = real_inner_trace(code.effect(a, b).matrix(), avg[sender]);
          pairs.push_back({{m, n, a, b}, accept});
        }
      }
    }
  }
  return max_type_report(std::move(pairs));
}

SimultaneityReport verify_simultaneous(const SimultaneousIdCode& code, double decomposition_tol,
                                       double completeness_tol) {
  const int m_count = code.id.m_count();
  const int n_count = code.id.n_count();
  if (static_cast<int>(code.subsets_a.size()) != m_count ||
      static_cast<int>(code.subsets_b.size()) != n_count) {
    throw ParameterError("simultaneous code needs one subset per message");
  }
  if (code.underlying.size() != static_cast<std::size_t>(code.r_count) * code.s_count) {
    throw ParameterError("underlying POVM must hold R*S effects");
  }
  for (const auto& subset : code.subsets_a) {
    for (int i : subset) {
      if (i < 0 || i >= code.r_count) {
        throw ParameterError("subset index " + std::to_string(i) + " out of range [0, R)");
      }
    }
  }
  for (const auto& subset : code.subsets_b) {
    for (int j : subset) {
      if (j < 0 || j >= code.s_count) {
        throw ParameterError("subset index " + std::to_string(j) + " out of range [0, S)");
      }
    }
  }

  SimultaneityReport report;
  report.decomposition_tol = decomposition_tol;
  report.completeness_tol = completeness_tol;
  report.completeness_deviation = code.underlying.completeness_deviation();
  const int dim = code.underlying.dim();
  for (int m = 0; m < m_count; ++m) {
    for (int n = 0; n < n_count; ++n) {
      // Same summation order as the constructor, so an untouched code
      // reproduces its effects bit for bit.
      ComplexMatrix sum(dim, dim);
      for (int i : code.subsets_a[m]) {
        for (int j : code.subsets_b[n]) {
          sum += code.underlying.effect(static_cast<std::size_t>(i) * code.s_count + j).matrix();
        }
      }
      const double dev = max_abs_diff(sum, code.id.effect(m, n).matrix());
      report.per_effect_deviation.push_back(dev);
      if (dev > report.max_decomposition_deviation) {
        report.max_decomposition_deviation = dev;
        report.worst_m = m;
        report.worst_n = n;
      }
    }
  }
  report.pass = report.completeness_deviation <= completeness_tol &&
                report.max_decomposition_deviation <= decomposition_tol;
  return report;
}

}  // namespace ccq
