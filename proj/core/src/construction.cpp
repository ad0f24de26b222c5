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

#include "ccq/construction.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "ccq/errors.hpp"

namespace ccq {

StochasticEncoder mix_encoders(const std::vector<StochasticEncoder>& encoders,
                               const std::vector<int>& subset) {
  if (subset.empty()) {
    throw ParameterError("mix_encoders needs a non-empty subset");
  }
  for (int i : subset) {
    if (i < 0 || i >= static_cast<int>(encoders.size())) {
      throw ParameterError("mix_encoders subset index " + std::to_string(i) + " out of range");
    }
  }
  const int k = encoders[subset.front()].k();
  const Alphabet alphabet = encoders[subset.front()].alphabet();
  const double inv = 1.0 / static_cast<double>(subset.size());
  std::map<Word, double> mass;
  for (int i : subset) {
    const StochasticEncoder& enc = encoders[i];
    if (enc.k() != k || enc.alphabet().size != alphabet.size) {
      throw ParameterError("mix_encoders members must share block length and alphabet");
    }
    for (const auto& [w, p] : enc.support()) {
      mass[w] += inv * p;
    }
  }
  std::vector<std::pair<Word, double>> support(mass.begin(), mass.end());
  return StochasticEncoder(k, alphabet, std::move(support));
}

SimultaneousIdCode construct_sim_id_code(const StochasticTransmissionCode& code,
                                         const SubsetFamily& fam_a, const SubsetFamily& fam_b) {
  if (fam_a.ground_size != code.m_count()) {
    throw ParameterError("family A ground size " + std::to_string(fam_a.ground_size) +
                         " does not match M = " + std::to_string(code.m_count()));
  }
  if (fam_b.ground_size != code.n_count()) {
    throw ParameterError("family B ground size " + std::to_string(fam_b.ground_size) +
                         " does not match N = " + std::to_string(code.n_count()));
  }
  if (fam_a.count() < 1 || fam_b.count() < 1) {
    throw ParameterError("construct_sim_id_code needs non-empty families");
  }

  SimultaneousIdCode out;
  out.id.k = code.k;
  const int n_count = code.n_count();
  for (const std::vector<int>& subset : fam_a.subsets) {
    out.id.encoders_x.push_back(mix_encoders(code.encoders_x, subset));
  }
  for (const std::vector<int>& subset : fam_b.subsets) {
    out.id.encoders_y.push_back(mix_encoders(code.encoders_y, subset));
  }
  for (const std::vector<int>& a : fam_a.subsets) {
    for (const std::vector<int>& b : fam_b.subsets) {
      ComplexMatrix sum(code.decoder.dim(), code.decoder.dim());
      for (int i : a) {
        for (int j : b) {
          sum += code.decoder.effect(static_cast<std::size_t>(i) * n_count + j).matrix();
        }
      }
      // Subset sums of POVM effects stay within [0, identity].
      out.id.effects.push_back(PovmEffect::from_valid(std::move(sum)));
    }
  }
  out.underlying = code.decoder;
  out.r_count = code.m_count();
  out.s_count = code.n_count();
  out.subsets_a = fam_a.subsets;
  out.subsets_b = fam_b.subsets;
  return out;
}

namespace {

void check_distinct(const std::vector<Word>& words, const char* sender) {
  std::set<Word> seen;
  for (const Word& w : words) {
    if (!seen.insert(w).second) {
      throw ParameterError(std::string(sender) +
                           " codewords must be distinct for derandomization, repeated " +
                           word_to_string(w));
    }
  }
}

int infer_alphabet(const std::vector<Word>& words) {
  int size = 1;
  for (const Word& w : words) {
    for (int letter : w) {
      size = std::max(size, letter + 1);
    }
  }
  return size;
}

}  // namespace

StochasticTransmissionCode derandomize_literal(const DeterministicCode& code) {
  check_distinct(code.codewords_x, "x");
  check_distinct(code.codewords_y, "y");
  const Alphabet ax{infer_alphabet(code.codewords_x)};
  const Alphabet ay{infer_alphabet(code.codewords_y)};
  std::vector<std::pair<Word, double>> ux;
  for (const Word& w : code.codewords_x) {
    ux.emplace_back(w, 1.0 / code.m_count());
  }
  std::vector<std::pair<Word, double>> uy;
  for (const Word& w : code.codewords_y) {
    uy.emplace_back(w, 1.0 / code.n_count());
  }
  StochasticTransmissionCode out{code.k, {}, {}, code.decoder};
  for (int m = 0; m < code.m_count(); ++m) {
    out.encoders_x.emplace_back(code.k, ax, ux);
  }
  for (int n = 0; n < code.n_count(); ++n) {
    out.encoders_y.emplace_back(code.k, ay, uy);
  }
  return out;
}

StochasticTransmissionCode derandomize_pointmass(const DeterministicCode& code) {
  check_distinct(code.codewords_x, "x");
  check_distinct(code.codewords_y, "y");
  const Alphabet ax{infer_alphabet(code.codewords_x)};
  const Alphabet ay{infer_alphabet(code.codewords_y)};
  StochasticTransmissionCode out{code.k, {}, {}, code.decoder};
  for (const Word& w : code.codewords_x) {
    out.encoders_x.push_back(StochasticEncoder::point_mass(ax, w));
  }
  for (const Word& w : code.codewords_y) {
    out.encoders_y.push_back(StochasticEncoder::point_mass(ay, w));
  }
  return out;
}

RatePoint transmission_rate_pair(int k, int m_count, int n_count) {
  if (k < 1 || m_count < 1 || n_count < 1) {
    throw ParameterError("transmission rate needs k >= 1 and counts >= 1");
  }
  RatePoint r;
  r.kind = RatePoint::Kind::kTransmission;
  r.r1 = std::log2(static_cast<double>(m_count)) / k;
  r.r2 = std::log2(static_cast<double>(n_count)) / k;
  return r;
}

RatePoint id_rate_pair(int k, int m_count, int n_count) {
  if (k < 1) {
    throw ParameterError("id rate needs k >= 1");
  }
  if (m_count < 2 || n_count < 2) {
    throw ParameterError("id rate undefined for message counts <= 1 (double log)");
  }
  RatePoint r;
  r.kind = RatePoint::Kind::kSimultaneousId;
  r.r1 = std::log2(std::log2(static_cast<double>(m_count))) / k;
  r.r2 = std::log2(std::log2(static_cast<double>(n_count))) / k;
  return r;
}

GrowthReport growth_check(int k, double rate, double delta, double lambda, double log2_m_prime,
                          double log2_m) {
  if (k < 1) {
    throw ParameterError("growth_check needs k >= 1");
  }
  if (!std::isfinite(rate) || !std::isfinite(delta) || !std::isfinite(lambda) ||
      !std::isfinite(log2_m_prime) || !std::isfinite(log2_m)) {
    throw ParameterError("growth_check needs finite inputs");
  }
  GrowthReport report;
  report.k = k;
  report.rate = rate;
  report.delta = delta;
  report.lambda = lambda;
  report.log2_m = log2_m;
  report.log2_m_prime = log2_m_prime;

  const double m = std::exp2(log2_m);
  const double lambda_m = lambda * m;
  if (lambda_m <= 9.0e18) {  // integer-exact floor
    report.lemma_bound_log2 = std::floor(lambda_m + 1e-9) - log2_m;
  } else {
    report.lemma_bound_log2 = lambda_m - log2_m;
    report.precision_note =
        "lambda*M exceeds the exact integer range; floor evaluated in the floating log domain";
  }
  report.lemma_bound_met = log2_m_prime >= report.lemma_bound_log2;

  const double exponent = static_cast<double>(k) * (rate - delta);
  report.paper_bound_log2 = lambda * std::exp2(exponent) - static_cast<double>(k);
  if (!std::isfinite(report.paper_bound_log2)) {
    report.precision_note = "rate bound overflows double precision; treated as unmet";
    report.paper_bound_met = false;
  } else {
    report.paper_bound_met = log2_m_prime >= report.paper_bound_log2;
  }
  return report;
}

}  // namespace ccq
