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

#include "doctest.h"
#include "json.hpp"

#include "ccq/construction.hpp"
#include "ccq/errors.hpp"
#include "ccq/experiment.hpp"
#include "ccq/rng.hpp"
#include "support/generators.hpp"

using namespace ccq;

TEST_CASE("depolarizing channel spec round trips") {
  const std::string text = R"({"kind": "depolarizing", "p": 0.2, "nx": 2, "ny": 2})";
  const ChannelSpec spec = channel_spec_from_json(text);
  CHECK(spec.kind == ChannelSpec::Kind::kDepolarizing);
  CHECK(spec.p == 0.2);
  const ChannelSpec again = channel_spec_from_json(channel_spec_to_json(spec));
  CHECK(again.p == spec.p);
  CHECK(again.nx == 2);
  const CcqChannel ch = again.build();
  CHECK(ch.dim() == 4);
}

TEST_CASE("classical channel spec round trips") {
  const std::string text =
      R"({"kind": "classical", "nx": 2, "ny": 2, "rows": {
        "0,0": [1.0, 0.0, 0.0], "0,1": [0.0, 1.0, 0.0],
        "1,0": [0.0, 1.0, 0.0], "1,1": [0.0, 0.0, 1.0]}})";
  const ChannelSpec spec = channel_spec_from_json(text);
  CHECK(spec.kind == ChannelSpec::Kind::kClassical);
  const ChannelSpec again = channel_spec_from_json(channel_spec_to_json(spec));
  CHECK(again.rows == spec.rows);
  CHECK(again.build().dim() == 3);
}

TEST_CASE("ccq table channel spec round trips and validates states") {
  Rng rng(71);
  ChannelSpec spec;
  spec.kind = ChannelSpec::Kind::kCcqTable;
  spec.nx = 2;
  spec.ny = 1;
  spec.dim = 2;
  spec.states = {testing::random_density_matrix(2, rng),
                 testing::random_density_matrix(2, rng)};
  const std::string text = channel_spec_to_json(spec);
  const ChannelSpec again = channel_spec_from_json(text);
  CHECK(max_abs_diff(again.states[0], spec.states[0]) == 0.0);
  CHECK(max_abs_diff(again.states[1], spec.states[1]) == 0.0);
  CHECK_NOTHROW(again.build());

  // A trace-2 state parses but fails to build.
  ChannelSpec bad = spec;
  bad.states[0] += bad.states[0];
  CHECK_THROWS_AS(bad.build(), ValidationError);
}

TEST_CASE("malformed channel files are validation errors") {
  CHECK_THROWS_AS(channel_spec_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(channel_spec_from_json(R"({"kind": "warp", "nx": 1, "ny": 1})"),
                  ValidationError);
  CHECK_THROWS_AS(channel_spec_from_json(R"({"kind": "depolarizing", "nx": 2, "ny": 2})"),
                  ValidationError);
  CHECK_THROWS_AS(
      channel_spec_from_json(
          R"({"kind": "classical", "nx": 2, "ny": 2, "rows": {"0,0": [1.0]}})"),
      ValidationError);
}

TEST_CASE("stochastic code files round trip") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 2);
  const StochasticTransmissionCode code =
      generate_random_code(ch, 2, 3, 9, EncoderMode::kRandomSupport);
  const std::string text = code_to_json(code);
  const LoadedCode loaded = code_from_json(text);
  REQUIRE(std::holds_alternative<StochasticTransmissionCode>(loaded));
  const StochasticTransmissionCode& again = std::get<StochasticTransmissionCode>(loaded);
  CHECK(again.k == 2);
  CHECK(again.m_count() == 2);
  CHECK(again.n_count() == 3);
  CHECK(max_error(again, ch).value == max_error(code, ch).value);
}

TEST_CASE("deterministic code files round trip through the word strings") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.1, 2, 2), 2);
  const DeterministicCode code = generate_random_deterministic_code(ch, 3, 2, 11);
  const LoadedCode loaded = code_from_json(code_to_json(code));
  REQUIRE(std::holds_alternative<DeterministicCode>(loaded));
  const DeterministicCode& again = std::get<DeterministicCode>(loaded);
  CHECK(again.codewords_x == code.codewords_x);
  CHECK(again.codewords_y == code.codewords_y);

  const StochasticTransmissionCode as_enc = as_stochastic(loaded);
  CHECK(as_enc.encoders_x[0].probability_of(code.codewords_x[0]) == 1.0);
}

TEST_CASE("sim-id code files round trip with 1-based subsets on disk") {
  const BlockChannel ch = BlockChannel::memoryless(depolarizing_channel(0.2, 2, 2), 2);
  const StochasticTransmissionCode code = generate_random_code(ch, 4, 4, 13);
  const FamilyBuildResult fam = build_subset_family(4, 0.5, 0.9, 2, 3);
  const SimultaneousIdCode sim = construct_sim_id_code(code, fam.family, fam.family);

  const std::string text = sim_id_code_to_json(sim);
  const nlohmann::ordered_json raw = nlohmann::ordered_json::parse(text);
  CHECK(raw["subsets_a"][0][0].get<int>() >= 1);

  const SimultaneousIdCode again = sim_id_code_from_json(text);
  CHECK(again.subsets_a == sim.subsets_a);
  CHECK(again.r_count == 4);
  CHECK(verify_simultaneous(again).pass);
  CHECK(id_error_first(again.id, ch).value == id_error_first(sim.id, ch).value);
}

TEST_CASE("family files round trip with 1-based indices") {
  const FamilyBuildResult built = build_subset_family(6, 0.5, 0.7, 4, 5);
  const std::string text = family_to_json(built.family);
  const nlohmann::ordered_json raw = nlohmann::ordered_json::parse(text);
  CHECK(raw["M"].get<int>() == 6);
  CHECK(raw["subsets"][0][0].get<int>() == 1);  // {0,1,2} stored as [1,2,3]

  const SubsetFamily again = family_from_json(text);
  CHECK(again.subsets == built.family.subsets);
  CHECK(again.weight == 3);

  // A corrupted file (intersection violation) fails on load.
  nlohmann::ordered_json corrupt = raw;
  corrupt["cap"] = 0.0;
  CHECK_THROWS_AS(family_from_json(corrupt.dump()), ValidationError);
}

TEST_CASE("family build reports carry the log2 bound and shortfall flag") {
  const FamilyBuildResult built = build_subset_family(8, 0.5, 0.3, 1000, 5);
  const nlohmann::ordered_json report =
      nlohmann::ordered_json::parse(family_build_report_to_json(built));
  CHECK(report["M"].get<int>() == 8);
  CHECK(report["mode"].get<std::string>() == "exhaustive");
  CHECK(report["shortfall"].get<bool>());
  CHECK(report["lober_bound_log2"].get<double>() == doctest::Approx(1.0));
  CHECK(report["count"].get<int>() == built.family.count());
}

TEST_CASE("missing files and fields raise the right error kinds") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/path.json"), ParameterError);
  CHECK_THROWS_AS(code_from_json(R"({"k": 1})"), ValidationError);
  CHECK_THROWS_AS(code_from_json(R"({"k": 1, "decoder": []})"), ValidationError);
  CHECK_THROWS_AS(family_from_json(R"({"M": 4})"), ValidationError);
  CHECK_THROWS_AS(sim_id_code_from_json(R"({"kind": "other"})"), ValidationError);
}

TEST_CASE("matrix payloads must be complete and finite") {
  const std::string bad_count =
      R"({"k": 1, "encoders_x": [[["0", 1.0]]], "encoders_y": [[["0", 1.0]]],
         "decoder": [{"rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0]]}]})";
  CHECK_THROWS_AS(code_from_json(bad_count), ValidationError);
}
