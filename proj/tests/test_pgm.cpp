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

#include "ccq/pgm.hpp"

#include "doctest.h"

#include "ccq/errors.hpp"
#include "ccq/rng.hpp"
#include "support/generators.hpp"

using namespace ccq;

TEST_CASE("orthogonal pure states measure as projectors plus shared complement") {
  // Spectral oracle in dim 3: S = |0><0| + |1><1|, S^{-1/2} acts as the
  // identity on the support, and the |2><2| leftover splits in half.
  const std::vector<ComplexMatrix> states = {ComplexMatrix::basis_projector(3, 0),
                                             ComplexMatrix::basis_projector(3, 1)};
  const Povm povm = build_square_root_measurement(states);
  ComplexMatrix leftover = ComplexMatrix::basis_projector(3, 2);
  leftover *= Complex(0.5, 0.0);
  CHECK(max_abs_diff(povm.effect(0).matrix(),
                     ComplexMatrix::basis_projector(3, 0) + leftover) <= 1e-12);
  CHECK(max_abs_diff(povm.effect(1).matrix(),
                     ComplexMatrix::basis_projector(3, 1) + leftover) <= 1e-12);
}

TEST_CASE("a single state absorbs the whole identity") {
  const Povm povm = build_square_root_measurement({ComplexMatrix::basis_projector(2, 0)});
  CHECK(max_abs_diff(povm.effect(0).matrix(), ComplexMatrix::identity(2)) <= 1e-12);
}

TEST_CASE("copies of the mixed state split the identity evenly") {
  ComplexMatrix mixed = ComplexMatrix::identity(4);
  mixed *= Complex(0.25, 0.0);
  const std::vector<ComplexMatrix> states(6, mixed);
  const Povm povm = build_square_root_measurement(states);
  ComplexMatrix share = ComplexMatrix::identity(4);
  share *= Complex(1.0 / 6.0, 0.0);
  for (std::size_t i = 0; i < povm.size(); ++i) {
    CHECK(max_abs_diff(povm.effect(i).matrix(), share) <= 1e-12);
  }
}

TEST_CASE("all-zero input is a parameter error") {
  CHECK_THROWS_AS(build_square_root_measurement({ComplexMatrix(3, 3), ComplexMatrix(3, 3)}),
                  ParameterError);
  CHECK_THROWS_AS(build_square_root_measurement({}), ParameterError);
  CHECK_THROWS_AS(
      build_square_root_measurement({ComplexMatrix(2, 2), ComplexMatrix(3, 3)}),
      ParameterError);
}

TEST_CASE("measurements built from random states validate at 1e-8") {
  Rng rng(61);
  for (int trial = 0; trial < 15; ++trial) {
    const int dim = 2 + trial % 15;
    const int count = 2 + static_cast<int>(rng.below(4));
    std::vector<ComplexMatrix> states;
    for (int i = 0; i < count; ++i) {
      states.push_back(testing::random_density_matrix(dim, rng));
    }
    const Povm povm = build_square_root_measurement(states);
    std::vector<ComplexMatrix> effects;
    for (const PovmEffect& e : povm.effects()) {
      effects.push_back(e.matrix());
    }
    CHECK(validate_povm(effects, 1e-8).pass);
  }
}
