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

#include "ccq/json_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "json.hpp"

#include "ccq/errors.hpp"
#include "ccq/subset_family.hpp"

namespace ccq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json parse(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

const ordered_json& require(const ordered_json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ValidationError(std::string("missing required field '") + key + "'");
  }
  return *it;
}

ordered_json matrix_to_json(const ComplexMatrix& m) {
  ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  ordered_json data = ordered_json::array();
  for (const Complex& v : m.data()) {
    data.push_back({v.real(), v.imag()});
  }
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const ordered_json& j) {
  const int rows = require(j, "rows").get<int>();
  const int cols = require(j, "cols").get<int>();
  const ordered_json& data = require(j, "data");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows) * cols) {
    throw ValidationError("matrix data must hold rows*cols [re, im] pairs");
  }
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j2 = 0; j2 < cols; ++j2, ++idx) {
      const ordered_json& pair = data[idx];
      if (!pair.is_array() || pair.size() != 2) {
        throw ValidationError("matrix entries must be [re, im] pairs");
      }
      m(i, j2) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
  }
  if (!m.all_finite()) {
    throw ValidationError("matrix has non-finite entries");
  }
  return m;
}

// "x,y" table keys.
std::pair<int, int> input_pair_from_key(const std::string& key) {
  const Word w = word_from_string(key);
  if (w.size() != 2) {
    throw ValidationError("table key '" + key + "' is not an \"x,y\" pair");
  }
  return {w[0], w[1]};
}

ordered_json encoder_to_json(const StochasticEncoder& enc) {
  ordered_json j = ordered_json::array();
  for (const auto& [w, p] : enc.support()) {
    j.push_back({word_to_string(w), p});
  }
  return j;
}

StochasticEncoder encoder_from_json(const ordered_json& j, int k) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError("encoder must be a non-empty array of [word, probability] pairs");
  }
  std::vector<std::pair<Word, double>> support;
  int alphabet = 1;
  for (const ordered_json& entry : j) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ValidationError("encoder entries must be [word, probability] pairs");
    }
    Word w = word_from_string(entry[0].get<std::string>());
    for (int letter : w) {
      alphabet = std::max(alphabet, letter + 1);
    }
    support.emplace_back(std::move(w), entry[1].get<double>());
  }
  return StochasticEncoder(k, Alphabet{alphabet}, std::move(support));
}

std::vector<PovmEffect> effects_from_json(const ordered_json& j, double tol, const char* what) {
  if (!j.is_array() || j.empty()) {
    throw ValidationError(std::string(what) + " must be a non-empty array of matrices");
  }
  std::vector<PovmEffect> effects;
  effects.reserve(j.size());
  for (const ordered_json& mj : j) {
    effects.emplace_back(matrix_from_json(mj), tol);
  }
  return effects;
}

ordered_json effects_to_json(const std::vector<PovmEffect>& effects) {
  ordered_json j = ordered_json::array();
  for (const PovmEffect& e : effects) {
    j.push_back(matrix_to_json(e.matrix()));
  }
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParameterError("cannot open file '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParameterError("cannot write file '" + path + "'");
  }
  out << content;
  if (!out) {
    throw ParameterError("write to '" + path + "' failed");
  }
}

CcqChannel ChannelSpec::build(double tol) const {
  switch (kind) {
    case Kind::kDepolarizing:
      return depolarizing_channel(p, nx, ny);
    case Kind::kClassical:
      return classical_channel_embedding(rows, nx, ny);
    case Kind::kCcqTable: {
      std::vector<DensityOperator> ops;
      ops.reserve(states.size());
      for (const ComplexMatrix& m : states) {
        ops.emplace_back(m, tol);
      }
      return CcqChannel(nx, ny, dim, std::move(ops));
    }
  }
  throw ParameterError("unknown channel kind");
}

std::string ChannelSpec::kind_name() const {
  switch (kind) {
    case Kind::kCcqTable:
      return "ccq";
    case Kind::kDepolarizing:
      return "depolarizing";
    case Kind::kClassical:
      return "classical";
  }
  return "?";
}

ChannelSpec channel_spec_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  const std::string kind = require(j, "kind").get<std::string>();
  ChannelSpec spec;
  spec.nx = require(j, "nx").get<int>();
  spec.ny = require(j, "ny").get<int>();
  if (spec.nx < 1 || spec.ny < 1) {
    throw ValidationError("channel needs nx, ny >= 1");
  }
  if (kind == "depolarizing") {
    spec.kind = ChannelSpec::Kind::kDepolarizing;
    spec.p = require(j, "p").get<double>();
    return spec;
  }
  if (kind == "classical") {
    spec.kind = ChannelSpec::Kind::kClassical;
    const ordered_json& rows = require(j, "rows");
    if (!rows.is_object() || rows.size() != static_cast<std::size_t>(spec.nx) * spec.ny) {
      throw ValidationError("classical channel needs one row per input pair");
    }
    spec.rows.assign(static_cast<std::size_t>(spec.nx) * spec.ny, {});
    for (const auto& [key, value] : rows.items()) {
      const auto [x, y] = input_pair_from_key(key);
      if (x < 0 || x >= spec.nx || y < 0 || y >= spec.ny) {
        throw ValidationError("row key '" + key + "' out of range");
      }
      spec.rows[static_cast<std::size_t>(x) * spec.ny + y] = value.get<std::vector<double>>();
    }
    for (const auto& row : spec.rows) {
      if (row.empty()) {
        throw ValidationError("classical channel table is incomplete");
      }
    }
    return spec;
  }
  if (kind == "ccq") {
    spec.kind = ChannelSpec::Kind::kCcqTable;
    spec.dim = require(j, "dim").get<int>();
    const ordered_json& states = require(j, "states");
    if (!states.is_object() || states.size() != static_cast<std::size_t>(spec.nx) * spec.ny) {
      throw ValidationError("ccq channel needs one state per input pair");
    }
    spec.states.assign(static_cast<std::size_t>(spec.nx) * spec.ny, ComplexMatrix());
    std::vector<bool> seen(static_cast<std::size_t>(spec.nx) * spec.ny, false);
    for (const auto& [key, value] : states.items()) {
      const auto [x, y] = input_pair_from_key(key);
      if (x < 0 || x >= spec.nx || y < 0 || y >= spec.ny) {
        throw ValidationError("state key '" + key + "' out of range");
      }
      const std::size_t idx = static_cast<std::size_t>(x) * spec.ny + y;
      spec.states[idx] = matrix_from_json(value);
      seen[idx] = true;
    }
    for (bool s : seen) {
      if (!s) {
        throw ValidationError("ccq channel table is incomplete");
      }
    }
    return spec;
  }
  throw ValidationError("unknown channel kind '" + kind + "'");
}

std::string channel_spec_to_json(const ChannelSpec& spec) {
  ordered_json j;
  j["kind"] = spec.kind_name();
  if (spec.kind == ChannelSpec::Kind::kDepolarizing) {
    j["p"] = spec.p;
  }
  j["nx"] = spec.nx;
  j["ny"] = spec.ny;
  if (spec.kind == ChannelSpec::Kind::kCcqTable) {
    j["dim"] = spec.dim;
    ordered_json states;
    for (int x = 0; x < spec.nx; ++x) {
      for (int y = 0; y < spec.ny; ++y) {
        states[std::to_string(x) + "," + std::to_string(y)] =
            matrix_to_json(spec.states[static_cast<std::size_t>(x) * spec.ny + y]);
      }
    }
    j["states"] = std::move(states);
  }
  if (spec.kind == ChannelSpec::Kind::kClassical) {
    ordered_json rows;
    for (int x = 0; x < spec.nx; ++x) {
      for (int y = 0; y < spec.ny; ++y) {
        rows[std::to_string(x) + "," + std::to_string(y)] =
            spec.rows[static_cast<std::size_t>(x) * spec.ny + y];
      }
    }
    j["rows"] = std::move(rows);
  }
  return dump(j);
}

LoadedCode code_from_json(const std::string& text, double tol) {
  const ordered_json j = parse(text);
  const int k = require(j, "k").get<int>();
  std::vector<PovmEffect> effects = effects_from_json(require(j, "decoder"), tol, "decoder");

  if (j.contains("codewords_x")) {
    DeterministicCode code{k, {}, {}, Povm(std::move(effects), tol)};
    for (const ordered_json& w : require(j, "codewords_x")) {
      code.codewords_x.push_back(word_from_string(w.get<std::string>()));
    }
    for (const ordered_json& w : require(j, "codewords_y")) {
      code.codewords_y.push_back(word_from_string(w.get<std::string>()));
    }
    for (const Word& w : code.codewords_x) {
      if (static_cast<int>(w.size()) != k) {
        throw ValidationError("codeword length does not match k");
      }
    }
    for (const Word& w : code.codewords_y) {
      if (static_cast<int>(w.size()) != k) {
        throw ValidationError("codeword length does not match k");
      }
    }
    if (code.codewords_x.empty() || code.codewords_y.empty() ||
        code.decoder.size() !=
            static_cast<std::size_t>(code.m_count()) * code.n_count()) {
      throw ValidationError("deterministic code needs M, N >= 1 and M*N decoder effects");
    }
    return code;
  }

  StochasticTransmissionCode code{k, {}, {}, Povm(std::move(effects), tol)};
  for (const ordered_json& enc : require(j, "encoders_x")) {
    code.encoders_x.push_back(encoder_from_json(enc, k));
  }
  for (const ordered_json& enc : require(j, "encoders_y")) {
    code.encoders_y.push_back(encoder_from_json(enc, k));
  }
  if (code.encoders_x.empty() || code.encoders_y.empty() ||
      code.decoder.size() != static_cast<std::size_t>(code.m_count()) * code.n_count()) {
    throw ValidationError("code needs M, N >= 1 and M*N decoder effects");
  }
  return code;
}

std::string code_to_json(const StochasticTransmissionCode& code) {
  ordered_json j;
  j["k"] = code.k;
  ordered_json ex = ordered_json::array();
  for (const StochasticEncoder& enc : code.encoders_x) {
    ex.push_back(encoder_to_json(enc));
  }
  j["encoders_x"] = std::move(ex);
  ordered_json ey = ordered_json::array();
  for (const StochasticEncoder& enc : code.encoders_y) {
    ey.push_back(encoder_to_json(enc));
  }
  j["encoders_y"] = std::move(ey);
  j["decoder"] = effects_to_json(code.decoder.effects());
  return dump(j);
}

std::string code_to_json(const DeterministicCode& code) {
  ordered_json j;
  j["k"] = code.k;
  ordered_json cx = ordered_json::array();
  for (const Word& w : code.codewords_x) {
    cx.push_back(word_to_string(w));
  }
  j["codewords_x"] = std::move(cx);
  ordered_json cy = ordered_json::array();
  for (const Word& w : code.codewords_y) {
    cy.push_back(word_to_string(w));
  }
  j["codewords_y"] = std::move(cy);
  j["decoder"] = effects_to_json(code.decoder.effects());
  return dump(j);
}

StochasticTransmissionCode as_stochastic(const LoadedCode& code) {
  if (std::holds_alternative<StochasticTransmissionCode>(code)) {
    return std::get<StochasticTransmissionCode>(code);
  }
  const DeterministicCode& det = std::get<DeterministicCode>(code);
  StochasticTransmissionCode out{det.k, {}, {}, det.decoder};
  int ax = 1;
  int ay = 1;
  for (const Word& w : det.codewords_x) {
    for (int letter : w) {
      ax = std::max(ax, letter + 1);
    }
  }
  for (const Word& w : det.codewords_y) {
    for (int letter : w) {
      ay = std::max(ay, letter + 1);
    }
  }
  for (const Word& w : det.codewords_x) {
    out.encoders_x.push_back(StochasticEncoder::point_mass(Alphabet{ax}, w));
  }
  for (const Word& w : det.codewords_y) {
    out.encoders_y.push_back(StochasticEncoder::point_mass(Alphabet{ay}, w));
  }
  return out;
}

SimultaneousIdCode sim_id_code_from_json(const std::string& text, double tol) {
  const ordered_json j = parse(text);
  if (!j.contains("kind") || j["kind"].get<std::string>() != "sim-id-code") {
    throw ValidationError("expected kind 'sim-id-code'");
  }
  SimultaneousIdCode code;
  code.id.k = require(j, "k").get<int>();
  for (const ordered_json& enc : require(j, "encoders_x")) {
    code.id.encoders_x.push_back(encoder_from_json(enc, code.id.k));
  }
  for (const ordered_json& enc : require(j, "encoders_y")) {
    code.id.encoders_y.push_back(encoder_from_json(enc, code.id.k));
  }
  code.r_count = require(j, "R").get<int>();
  code.s_count = require(j, "S").get<int>();
  code.underlying = Povm(effects_from_json(require(j, "underlying"), tol, "underlying"), tol);
  if (code.underlying.size() != static_cast<std::size_t>(code.r_count) * code.s_count) {
    throw ValidationError("underlying POVM must hold R*S effects");
  }
  for (const ordered_json& subset : require(j, "subsets_a")) {
    std::vector<int> s;
    for (const ordered_json& v : subset) {
      s.push_back(v.get<int>() - 1);  // file indices are 1-based
    }
    code.subsets_a.push_back(std::move(s));
  }
  for (const ordered_json& subset : require(j, "subsets_b")) {
    std::vector<int> s;
    for (const ordered_json& v : subset) {
      s.push_back(v.get<int>() - 1);
    }
    code.subsets_b.push_back(std::move(s));
  }
  code.id.effects = effects_from_json(require(j, "effects"), tol, "effects");
  if (code.id.effects.size() != code.subsets_a.size() * code.subsets_b.size() ||
      code.id.effects.empty()) {
    throw ValidationError("sim-id code needs M'*N' effects");
  }
  if (code.id.encoders_x.size() != code.subsets_a.size() ||
      code.id.encoders_y.size() != code.subsets_b.size()) {
    throw ValidationError("sim-id code needs one encoder per subset");
  }
  return code;
}

std::string sim_id_code_to_json(const SimultaneousIdCode& code) {
  ordered_json j;
  j["kind"] = "sim-id-code";
  j["k"] = code.id.k;
  ordered_json ex = ordered_json::array();
  for (const StochasticEncoder& enc : code.id.encoders_x) {
    ex.push_back(encoder_to_json(enc));
  }
  j["encoders_x"] = std::move(ex);
  ordered_json ey = ordered_json::array();
  for (const StochasticEncoder& enc : code.id.encoders_y) {
    ey.push_back(encoder_to_json(enc));
  }
  j["encoders_y"] = std::move(ey);
  j["R"] = code.r_count;
  j["S"] = code.s_count;
  j["underlying"] = effects_to_json(code.underlying.effects());
  ordered_json sa = ordered_json::array();
  for (const std::vector<int>& subset : code.subsets_a) {
    ordered_json s = ordered_json::array();
    for (int i : subset) {
      s.push_back(i + 1);
    }
    sa.push_back(std::move(s));
  }
  j["subsets_a"] = std::move(sa);
  ordered_json sb = ordered_json::array();
  for (const std::vector<int>& subset : code.subsets_b) {
    ordered_json s = ordered_json::array();
    for (int i : subset) {
      s.push_back(i + 1);
    }
    sb.push_back(std::move(s));
  }
  j["subsets_b"] = std::move(sb);
  j["effects"] = effects_to_json(code.id.effects);
  return dump(j);
}

SubsetFamily family_from_json(const std::string& text) {
  const ordered_json j = parse(text);
  SubsetFamily family;
  family.ground_size = require(j, "M").get<int>();
  family.weight = require(j, "weight").get<int>();
  family.intersection_cap = require(j, "cap").get<double>();
  for (const ordered_json& subset : require(j, "subsets")) {
    std::vector<int> s;
    for (const ordered_json& v : subset) {
      s.push_back(v.get<int>() - 1);  // file indices are 1-based
    }
    family.subsets.push_back(std::move(s));
  }
  validate_subset_family(family);
  return family;
}

std::string family_to_json(const SubsetFamily& family) {
  ordered_json j;
  j["M"] = family.ground_size;
  j["weight"] = family.weight;
  j["cap"] = family.intersection_cap;
  ordered_json subsets = ordered_json::array();
  for (const std::vector<int>& subset : family.subsets) {
    ordered_json s = ordered_json::array();
    for (int i : subset) {
      s.push_back(i + 1);
    }
    subsets.push_back(std::move(s));
  }
  j["subsets"] = std::move(subsets);
  return dump(j);
}

std::string family_build_report_to_json(const FamilyBuildResult& result) {
  ordered_json j;
  j["M"] = result.family.ground_size;
  j["lambda"] = result.lambda;
  j["epsilon"] = result.epsilon;
  j["weight"] = result.family.weight;
  j["cap"] = result.family.intersection_cap;
  j["target"] = result.target;
  j["seed"] = result.seed;
  j["mode"] = result.exhaustive ? "exhaustive" : "greedy";
  j["count"] = result.family.count();
  j["shortfall"] = result.shortfall;
  const LoberParams params{result.lambda, result.epsilon};
  const bool condition =
      result.lambda > 0.0 && result.lambda < 1.0 && result.epsilon > 0.0 && result.epsilon < 1.0
          ? lober_condition(params)
          : false;
  j["lober_condition"] = condition;
  j["lober_bound_log2"] = lober_bound_log2(result.family.ground_size, result.lambda);
  return dump(j);
}

}  // namespace ccq
