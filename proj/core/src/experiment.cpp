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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <utility>

#include "json.hpp"

#include "ccq/errors.hpp"
#include "ccq/pgm.hpp"
#include "ccq/rng.hpp"

namespace ccq {

using ordered_json = nlohmann::ordered_json;

namespace {

// Distinct sub-seed streams for the pipeline stages.
constexpr std::uint64_t kStreamCodewordsX = 1;
constexpr std::uint64_t kStreamCodewordsY = 2;
constexpr std::uint64_t kStreamSupports = 3;
constexpr std::uint64_t kStreamFamilyA = 4;
constexpr std::uint64_t kStreamFamilyB = 5;

std::vector<Word> sample_distinct_words(const Alphabet& alphabet, int k, int count,
                                        std::uint64_t seed) {
  std::vector<Word> words = enumerate_words(alphabet, k);
  if (count > static_cast<int>(words.size())) {
    throw ParameterError("cannot pick " + std::to_string(count) + " distinct words from " +
                         std::to_string(words.size()));
  }
  Rng rng(seed);
  rng.shuffle(words);
  words.resize(static_cast<std::size_t>(count));
  return words;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string check_cell(const std::vector<BoundCheck>& checks, const std::string& name) {
  for (const BoundCheck& c : checks) {
    if (c.name == name) {
      if (!c.applicable) {
        return "skip";
      }
      return c.pass ? "pass" : "fail";
    }
  }
  return "skip";
}

ordered_json rate_to_json(const RatePoint& r) {
  ordered_json j;
  j["r1"] = r.r1;
  j["r2"] = r.r2;
  return j;
}

ordered_json growth_to_json(const GrowthReport& g) {
  ordered_json j;
  j["log2_m"] = g.log2_m;
  j["log2_m_prime"] = g.log2_m_prime;
  j["lemma_bound_log2"] = g.lemma_bound_log2;
  j["paper_bound_log2"] = g.paper_bound_log2;
  j["lemma_bound_met"] = g.lemma_bound_met;
  j["paper_bound_met"] = g.paper_bound_met;
  if (!g.precision_note.empty()) {
    j["precision_note"] = g.precision_note;
  }
  return j;
}

ordered_json family_result_to_json(const FamilyBuildResult& r) {
  ordered_json j;
  j["count"] = r.family.count();
  j["weight"] = r.family.weight;
  j["cap"] = r.family.intersection_cap;
  j["target"] = r.target;
  j["seed"] = r.seed;
  j["mode"] = r.exhaustive ? "exhaustive" : "greedy";
  j["shortfall"] = r.shortfall;
  j["bound_log2"] = lober_bound_log2(r.family.ground_size, r.lambda);
  return j;
}

class StageTimer {
 public:
  explicit StageTimer(std::vector<std::pair<std::string, double>>& sink) : sink_(sink) {}

  template <typename F>
  auto run(const std::string& stage, F&& fn) -> decltype(fn()) {
    const auto start = std::chrono::steady_clock::now();
    try {
      if constexpr (std::is_void_v<decltype(fn())>) {
        fn();
        record(stage, start);
      } else {
        auto value = fn();
        record(stage, start);
        return value;
      }
    } catch (const Error&) {
      record(stage, start);
      throw;
    } catch (const std::exception& e) {
      record(stage, start);
      throw NumericalError("stage " + stage + ": " + e.what());
    }
  }

 private:
  void record(const std::string& stage, std::chrono::steady_clock::time_point start) {
    const auto stop = std::chrono::steady_clock::now();
    sink_.emplace_back(stage,
                       std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::vector<std::pair<std::string, double>>& sink_;
};

// Re-throws ccq errors with the stage tag prepended.
template <typename F>
auto tagged(const std::string& stage, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ValidationError& e) {
    throw ValidationError("stage " + stage + ": " + e.what());
  } catch (const DimensionLimitError& e) {
    throw DimensionLimitError("stage " + stage + ": " + e.what());
  } catch (const ParameterError& e) {
    throw ParameterError("stage " + stage + ": " + e.what());
  } catch (const NumericalError& e) {
    throw NumericalError("stage " + stage + ": " + e.what());
  }
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json(const std::string& text,
                                             const std::string& base_dir) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid config JSON: ") + e.what());
  }

  ExperimentConfig config;
  if (!j.contains("channel")) {
    throw ValidationError("config needs a 'channel' (path or inline object)");
  }
  if (j["channel"].is_string()) {
    std::string path = j["channel"].get<std::string>();
    if (!path.empty() && path.front() != '/' && !base_dir.empty()) {
      path = base_dir + "/" + path;
    }
    config.channel_json = read_text_file(path);
  } else {
    config.channel_json = j["channel"].dump();
  }
  if (!j.contains("seed")) {
    throw ValidationError("config needs an explicit 'seed' for the randomized steps");
  }
  config.seed = j["seed"].get<std::uint64_t>();

  config.k = j.value("k", config.k);
  config.m_count = j.value("M", config.m_count);
  config.n_count = j.value("N", config.n_count);
  config.lambda = j.value("lambda", config.lambda);
  config.epsilon1 = j.value("epsilon1", config.epsilon1);
  config.epsilon2 = j.value("epsilon2", config.epsilon2);
  config.delta = j.value("delta", config.delta);
  if (j.contains("epsilon")) {
    config.epsilon_override = j["epsilon"].get<double>();
  }
  config.target_m_prime = j.value("target_m_prime", 0);
  config.target_n_prime = j.value("target_n_prime", 0);
  if (j.contains("encoder_mode")) {
    const std::string mode = j["encoder_mode"].get<std::string>();
    if (mode == "pointmass") {
      config.encoder_mode = EncoderMode::kPointMass;
    } else if (mode == "support") {
      config.encoder_mode = EncoderMode::kRandomSupport;
    } else {
      throw ValidationError("encoder_mode must be 'pointmass' or 'support'");
    }
  }
  if (j.contains("code")) {
    if (j["code"].is_string()) {
      std::string path = j["code"].get<std::string>();
      if (!path.empty() && path.front() != '/' && !base_dir.empty()) {
        path = base_dir + "/" + path;
      }
      config.code_json = read_text_file(path);
    } else {
      config.code_json = j["code"].dump();
    }
  }
  if (j.contains("out_dir")) {
    config.out_dir = j["out_dir"].get<std::string>();
  }
  config.tol = j.value("tol", config.tol);

  if (config.k < 1 || config.m_count < 1 || config.n_count < 1) {
    throw ParameterError("config needs k, M, N >= 1");
  }
  if (!(config.lambda > 0.0 && config.lambda < 1.0)) {
    throw ParameterError("config lambda must lie in (0, 1)");
  }
  for (const auto& [name, value] :
       {std::pair<const char*, double>{"epsilon1", config.epsilon1},
        {"epsilon2", config.epsilon2}, {"delta", config.delta}}) {
    if (!(value > 0.0 && value < 1.0)) {
      throw ParameterError(std::string("config ") + name + " must lie in (0, 1)");
    }
  }
  if (config.target_m_prime < 0 || config.target_n_prime < 0) {
    throw ParameterError("config family targets must be >= 0 (0 = auto)");
  }
  if (!(config.tol > 0.0)) {
    throw ParameterError("config tol must be positive");
  }
  return config;
}

std::string ExperimentConfig::to_json() const {
  ordered_json j;
  j["channel"] = ordered_json::parse(channel_json);
  j["k"] = k;
  j["M"] = m_count;
  j["N"] = n_count;
  j["lambda"] = lambda;
  j["epsilon1"] = epsilon1;
  j["epsilon2"] = epsilon2;
  j["delta"] = delta;
  if (epsilon_override.has_value()) {
    j["epsilon"] = *epsilon_override;
  }
  j["seed"] = seed;
  j["target_m_prime"] = target_m_prime;
  j["target_n_prime"] = target_n_prime;
  j["encoder_mode"] = encoder_mode == EncoderMode::kPointMass ? "pointmass" : "support";
  if (code_json.has_value()) {
    j["code"] = ordered_json::parse(*code_json);
  }
  if (out_dir.has_value()) {
    j["out_dir"] = *out_dir;
  }
  j["tol"] = tol;
  return j.dump(2) + "\n";
}

DeterministicCode generate_random_deterministic_code(const BlockChannel& ch, int m_count,
                                                     int n_count, std::uint64_t seed) {
  if (m_count < 1 || n_count < 1) {
    throw ParameterError("code needs M, N >= 1");
  }
  std::vector<Word> codewords_x =
      sample_distinct_words(Alphabet{ch.nx()}, ch.k(), m_count, Rng::derive(seed, kStreamCodewordsX));
  std::vector<Word> codewords_y =
      sample_distinct_words(Alphabet{ch.ny()}, ch.k(), n_count, Rng::derive(seed, kStreamCodewordsY));
  std::vector<ComplexMatrix> outputs;
  outputs.reserve(static_cast<std::size_t>(m_count) * n_count);
  for (const Word& xw : codewords_x) {
    for (const Word& yw : codewords_y) {
      outputs.push_back(ch.evaluate(xw, yw).matrix());
    }
  }
  return DeterministicCode{ch.k(), std::move(codewords_x), std::move(codewords_y),
                           build_square_root_measurement(outputs)};
}

StochasticTransmissionCode generate_random_code(const BlockChannel& ch, int m_count, int n_count,
                                                std::uint64_t seed, EncoderMode mode) {
  if (mode == EncoderMode::kPointMass) {
    return derandomize_pointmass(generate_random_deterministic_code(ch, m_count, n_count, seed));
  }

  if (m_count < 1 || n_count < 1) {
    throw ParameterError("code needs M, N >= 1");
  }
  const std::vector<Word> all_x = enumerate_words(Alphabet{ch.nx()}, ch.k());
  const std::vector<Word> all_y = enumerate_words(Alphabet{ch.ny()}, ch.k());
  Rng rng(Rng::derive(seed, kStreamSupports));

  const auto sample_encoder = [&rng, &ch](const std::vector<Word>& words, int alphabet) {
    const std::size_t i = static_cast<std::size_t>(rng.below(words.size()));
    std::size_t j = i;
    if (words.size() > 1) {
      while (j == i) {
        j = static_cast<std::size_t>(rng.below(words.size()));
      }
    }
    const double u = rng.uniform(0.25, 0.75);
    std::vector<std::pair<Word, double>> support;
    if (words.size() == 1) {
      support.emplace_back(words[i], 1.0);
    } else {
      support.emplace_back(words[i], u);
      support.emplace_back(words[j], 1.0 - u);
    }
    return StochasticEncoder(ch.k(), Alphabet{alphabet}, std::move(support));
  };

  std::vector<StochasticEncoder> encoders_x;
  std::vector<StochasticEncoder> encoders_y;
  for (int m = 0; m < m_count; ++m) {
    encoders_x.push_back(sample_encoder(all_x, ch.nx()));
  }
  for (int n = 0; n < n_count; ++n) {
    encoders_y.push_back(sample_encoder(all_y, ch.ny()));
  }

  std::vector<ComplexMatrix> outputs;
  outputs.reserve(static_cast<std::size_t>(m_count) * n_count);
  for (const StochasticEncoder& px : encoders_x) {
    for (const StochasticEncoder& qy : encoders_y) {
      outputs.push_back(average_block_output(ch, px, qy));
    }
  }
  return StochasticTransmissionCode{ch.k(), std::move(encoders_x), std::move(encoders_y),
                                    build_square_root_measurement(outputs)};
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  ExperimentResult result;
  ExperimentReport& report = result.report;
  report.config = config;
  StageTimer timer(report.timings_ms);

  const BlockChannel channel = timer.run("channel", [&] {
    return tagged("channel", [&] {
      const ChannelSpec spec = channel_spec_from_json(config.channel_json);
      report.channel_kind = spec.kind_name();
      CcqChannel base = spec.build(config.tol);
      report.nx = base.nx();
      report.ny = base.ny();
      report.dim = base.dim();
      return BlockChannel::memoryless(std::move(base), config.k);
    });
  });

  timer.run("code", [&] {
    tagged("code", [&] {
      if (config.code_json.has_value()) {
        LoadedCode loaded = code_from_json(*config.code_json, config.tol);
        if (std::holds_alternative<DeterministicCode>(loaded)) {
          result.deterministic_code = std::get<DeterministicCode>(loaded);
        }
        result.code = as_stochastic(loaded);
        if (result.code.m_count() != config.m_count ||
            result.code.n_count() != config.n_count || result.code.k != config.k) {
          throw ParameterError("loaded code shape (k=" + std::to_string(result.code.k) +
                               ", M=" + std::to_string(result.code.m_count()) +
                               ", N=" + std::to_string(result.code.n_count()) +
                               ") disagrees with config");
        }
      } else if (config.encoder_mode == EncoderMode::kPointMass) {
        result.deterministic_code = generate_random_deterministic_code(
            channel, config.m_count, config.n_count, config.seed);
        result.code = derandomize_pointmass(*result.deterministic_code);
      } else {
        result.code = generate_random_code(channel, config.m_count, config.n_count, config.seed,
                                           config.encoder_mode);
      }
    });
  });

  timer.run("errors", [&] {
    tagged("errors", [&] {
      report.e = max_error(result.code, channel).value;
      report.e_bar = avg_error(result.code, channel).value;
    });
  });

  timer.run("epsilon", [&] {
    tagged("epsilon", [&] {
      report.epsilon = config.epsilon_override.has_value()
                           ? *config.epsilon_override
                           : std::min(config.epsilon1, config.epsilon2 / 4.0);
      if (!(report.epsilon > 0.0 && report.epsilon < 1.0)) {
        throw ParameterError("family parameter epsilon = " + std::to_string(report.epsilon) +
                             " must lie in (0, 1)");
      }
      // A false condition is a feasibility warning, not a failure: the lemma
      // then guarantees nothing, but the finite construction still runs.
      report.lober_holds = lober_condition(LoberParams{config.lambda, report.epsilon});
    });
  });

  timer.run("families", [&] {
    tagged("families", [&] {
      const auto auto_target = [](int m, double lambda) {
        const double bound = std::exp2(lober_bound_log2(m, lambda));
        return std::max(2, static_cast<int>(std::ceil(bound)));
      };
      const int target_m = config.target_m_prime > 0 ? config.target_m_prime
                                                     : auto_target(config.m_count, config.lambda);
      const int target_n = config.target_n_prime > 0 ? config.target_n_prime
                                                     : auto_target(config.n_count, config.lambda);
      report.fam_a = build_subset_family(config.m_count, config.lambda, report.epsilon, target_m,
                                         Rng::derive(config.seed, kStreamFamilyA));
      report.fam_b = build_subset_family(config.n_count, config.lambda, report.epsilon, target_n,
                                         Rng::derive(config.seed, kStreamFamilyB));
      report.m_prime = report.fam_a.family.count();
      report.n_prime = report.fam_b.family.count();
    });
  });

  timer.run("construction", [&] {
    tagged("construction", [&] {
      result.id_code = construct_sim_id_code(result.code, report.fam_a.family,
                                             report.fam_b.family);
      report.simultaneity = verify_simultaneous(result.id_code);
    });
  });

  timer.run("id_errors", [&] {
    tagged("id_errors", [&] {
      report.e1 = id_error_first(result.id_code.id, channel).value;
      if (report.m_prime * report.n_prime >= 2) {
        report.e2 = id_error_second(result.id_code.id, channel).value;
        report.eps_fam =
            family_conflict_bound(result.id_code.subsets_a, result.id_code.subsets_b);
      }
    });
  });

  timer.run("rates", [&] {
    tagged("rates", [&] {
      report.transmission_rate = transmission_rate_pair(config.k, config.m_count, config.n_count);
      if (report.m_prime >= 2 && report.n_prime >= 2) {
        report.id_rate = id_rate_pair(config.k, report.m_prime, report.n_prime);
      }
      report.growth_m = growth_check(config.k, report.transmission_rate.r1, config.delta,
                                     config.lambda, std::log2(double(report.m_prime)),
                                     std::log2(double(config.m_count)));
      report.growth_n = growth_check(config.k, report.transmission_rate.r2, config.delta,
                                     config.lambda, std::log2(double(report.n_prime)),
                                     std::log2(double(config.n_count)));
    });
  });

  timer.run("checks", [&] {
    const double tol = config.tol;
    const bool e_within = report.e <= report.epsilon;
    const auto add = [&report](std::string name, bool applicable, double lhs, double rhs) {
      BoundCheck c;
      c.name = std::move(name);
      c.applicable = applicable;
      c.lhs = lhs;
      c.rhs = rhs;
      c.margin = rhs - lhs;
      c.pass = !applicable || lhs <= rhs;
      report.checks.push_back(std::move(c));
    };
    add("first_kind_vs_source", true, report.e1, report.e + tol);
    add("first_kind_target", e_within, report.e1, config.epsilon1);
    const bool have_e2 = report.e2.has_value();
    add("second_kind_vs_source", have_e2, have_e2 ? *report.e2 : 0.0,
        have_e2 ? *report.eps_fam + 3.0 * report.e + tol : 0.0);
    add("family_conflict_vs_epsilon", have_e2, have_e2 ? *report.eps_fam : 0.0,
        report.epsilon + tol);
    add("second_kind_four_epsilon", have_e2 && e_within, have_e2 ? *report.e2 : 0.0,
        4.0 * report.epsilon + tol);
    add("second_kind_target", have_e2 && e_within, have_e2 ? *report.e2 : 0.0, config.epsilon2);
    add("growth_m", true, report.growth_m.lemma_bound_log2, report.growth_m.log2_m_prime);
    add("growth_n", true, report.growth_n.lemma_bound_log2, report.growth_n.log2_m_prime);
  });

  return result;
}

std::string ExperimentReport::to_json(bool include_timings) const {
  ordered_json j;
  j["config"] = ordered_json::parse(config.to_json());

  ordered_json ch;
  ch["kind"] = channel_kind;
  ch["nx"] = nx;
  ch["ny"] = ny;
  ch["dim"] = dim;
  j["channel"] = std::move(ch);

  ordered_json derived;
  derived["epsilon"] = epsilon;
  derived["lober_condition"] = lober_holds;
  j["derived"] = std::move(derived);

  ordered_json tx;
  tx["k"] = config.k;
  tx["M"] = config.m_count;
  tx["N"] = config.n_count;
  tx["e"] = e;
  tx["e_bar"] = e_bar;
  tx["rate"] = rate_to_json(transmission_rate);
  j["transmission"] = std::move(tx);

  ordered_json fams;
  fams["a"] = family_result_to_json(fam_a);
  fams["b"] = family_result_to_json(fam_b);
  j["families"] = std::move(fams);

  ordered_json id;
  id["M_prime"] = m_prime;
  id["N_prime"] = n_prime;
  id["e1"] = e1;
  if (e2.has_value()) {
    id["e2"] = *e2;
  } else {
    id["e2"] = nullptr;
  }
  if (eps_fam.has_value()) {
    id["eps_fam"] = *eps_fam;
  } else {
    id["eps_fam"] = nullptr;
  }
  if (id_rate.has_value()) {
    id["rate"] = rate_to_json(*id_rate);
  } else {
    id["rate"] = nullptr;
  }
  ordered_json sim;
  sim["pass"] = simultaneity.pass;
  sim["completeness_deviation"] = simultaneity.completeness_deviation;
  sim["max_decomposition_deviation"] = simultaneity.max_decomposition_deviation;
  id["simultaneous"] = std::move(sim);
  j["id"] = std::move(id);

  ordered_json growth;
  growth["m"] = growth_to_json(growth_m);
  growth["n"] = growth_to_json(growth_n);
  j["growth"] = std::move(growth);

  ordered_json checks_json = ordered_json::array();
  for (const BoundCheck& c : checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["applicable"] = c.applicable;
    cj["pass"] = c.pass;
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["margin"] = c.margin;
    checks_json.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks_json);

  if (include_timings) {
    ordered_json t;
    for (const auto& [stage, ms] : timings_ms) {
      t[stage] = ms;
    }
    j["timings_ms"] = std::move(t);
  }
  return j.dump(2) + "\n";
}

std::string ExperimentReport::csv_header() {
  return "k,M,N,M_prime,N_prime,e,e_bar,e1,e2,eps_fam,r1,r2,id_r1,id_r2,"
         "check_first_kind,check_second_kind,check_four_epsilon,check_growth_m,"
         "check_growth_n,lober_condition\n";
}

std::string ExperimentReport::to_csv_row() const {
  std::string row;
  row += std::to_string(config.k) + "," + std::to_string(config.m_count) + "," +
         std::to_string(config.n_count) + "," + std::to_string(m_prime) + "," +
         std::to_string(n_prime) + ",";
  row += format_double(e) + "," + format_double(e_bar) + "," + format_double(e1) + ",";
  row += (e2.has_value() ? format_double(*e2) : std::string()) + ",";
  row += (eps_fam.has_value() ? format_double(*eps_fam) : std::string()) + ",";
  row += format_double(transmission_rate.r1) + "," + format_double(transmission_rate.r2) + ",";
  row += (id_rate.has_value() ? format_double(id_rate->r1) : std::string()) + ",";
  row += (id_rate.has_value() ? format_double(id_rate->r2) : std::string()) + ",";
  row += check_cell(checks, "first_kind_vs_source") + ",";
  row += check_cell(checks, "second_kind_vs_source") + ",";
  row += check_cell(checks, "second_kind_four_epsilon") + ",";
  row += check_cell(checks, "growth_m") + ",";
  row += check_cell(checks, "growth_n") + ",";
  row += lober_holds ? "true" : "false";
  row += "\n";
  return row;
}

}  // namespace ccq
