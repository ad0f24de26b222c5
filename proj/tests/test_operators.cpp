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

#include "ccq/operators.hpp"

#include "doctest.h"

#include "ccq/errors.hpp"
#include "ccq/rng.hpp"
#include "support/generators.hpp"

using namespace ccq;

TEST_CASE("random mixtures validate as densities") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 2 + trial % 15;
    const DensityValidationReport report =
        validate_density(testing::random_density_matrix(dim, rng));
    CHECK(report.pass);
    CHECK(report.hermiticity_deviation <= 1e-9);
    CHECK(report.min_eigenvalue >= -1e-9);
    CHECK(report.trace_deviation <= 1e-9);
  }
}

TEST_CASE("density faults of 1e-6 are detected at the default tolerance") {
  Rng rng(22);
  const ComplexMatrix rho = testing::random_density_matrix(4, rng);

  SUBCASE("trace bump") {
    ComplexMatrix bad = rho;
    bad(0, 0) += Complex(1e-6, 0.0);
    CHECK(!validate_density(bad).pass);
    CHECK_THROWS_AS(DensityOperator{bad}, ValidationError);
  }
  SUBCASE("hermiticity break") {
    ComplexMatrix bad = rho;
    bad(0, 1) += Complex(0.0, 1e-6);
    bad(1, 0) += Complex(0.0, 1e-6);  // same sign on both triangles skews A - A'
    CHECK(!validate_density(bad).pass);
  }
  SUBCASE("negative eigenvalue") {
    ComplexMatrix bad = ComplexMatrix::diagonal({1.0 + 1e-6, -1e-6, 0.0, 0.0});
    const DensityValidationReport report = validate_density(bad);
    CHECK(!report.pass);
    CHECK(report.min_eigenvalue <= -0.9e-6);
  }
}

TEST_CASE("basis measurement is a valid POVM") {
  const std::vector<ComplexMatrix> effects = {ComplexMatrix::basis_projector(2, 0),
                                              ComplexMatrix::basis_projector(2, 1)};
  const PovmValidationReport report = validate_povm(effects);
  CHECK(report.pass);
  CHECK(report.completeness_deviation == 0.0);
}

TEST_CASE("uniform two-effect POVM is valid") {
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= Complex(0.5, 0.0);
  CHECK(validate_povm({half, half}).pass);
}

TEST_CASE("over-complete effects fail with deviation 1") {
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  const PovmValidationReport report = validate_povm({eye, eye});
  CHECK(!report.pass);
  CHECK(report.completeness_deviation == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mismatched effect dimensions are a shape error") {
  CHECK_THROWS_AS(validate_povm({ComplexMatrix::identity(2), ComplexMatrix::identity(3)}),
                  ParameterError);
  CHECK_THROWS_AS(validate_povm({}), ParameterError);
}

TEST_CASE("random projective POVMs validate; perturbed ones fail") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 2 + trial % 15;
    const int count = 2 + static_cast<int>(rng.below(3));
    std::vector<ComplexMatrix> effects = testing::random_projective_povm(dim, count, rng);
    CHECK(validate_povm(effects).pass);

    effects[0](0, 0) += Complex(1e-6, 0.0);
    CHECK(!validate_povm(effects).pass);
  }
}

TEST_CASE("effect spectrum outside [0,1] is rejected") {
  ComplexMatrix overweight = ComplexMatrix::basis_projector(2, 0);
  overweight *= Complex(1.1, 0.0);
  CHECK_THROWS_AS(PovmEffect{overweight}, ValidationError);
  const PovmValidationReport report =
      validate_povm({overweight, ComplexMatrix::basis_projector(2, 1)});
  CHECK(!report.pass);
  CHECK(report.effects[0].max_eigenvalue == doctest::Approx(1.1).epsilon(1e-12));
}

TEST_CASE("Povm construction enforces completeness") {
  std::vector<PovmEffect> short_list;
  short_list.push_back(PovmEffect(ComplexMatrix::basis_projector(2, 0)));
  CHECK_THROWS_AS(Povm(std::move(short_list)), ValidationError);
}
