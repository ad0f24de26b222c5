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

#include "ccq/complex_matrix.hpp"

#include <cmath>

#include "doctest.h"

#include "ccq/errors.hpp"
#include "ccq/rng.hpp"
#include "support/generators.hpp"

using namespace ccq;

TEST_CASE("kron of identities is the identity") {
  const ComplexMatrix out = kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
  CHECK(max_abs_diff(out, ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron of basis projectors lands on the tensor index") {
  const ComplexMatrix out =
      kron(ComplexMatrix::basis_projector(2, 0), ComplexMatrix::basis_projector(2, 1));
  CHECK(out.rows() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      CHECK(out(i, j) == (i == 1 && j == 1 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
  }
}

TEST_CASE("kron of diagonals expands entrywise") {
  const ComplexMatrix a = ComplexMatrix::diagonal({2.0, 3.0});
  const ComplexMatrix b = ComplexMatrix::diagonal({5.0, 7.0});
  const ComplexMatrix out = kron(a, b);
  // Hand expansion of the definition: out[i*2+k][j*2+l] = a(i,j) b(k,l).
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          CHECK(out(i * 2 + k, j * 2 + l) == a(i, j) * b(k, l));
        }
      }
    }
  }
  CHECK(out(0, 0) == Complex(10.0, 0.0));
  CHECK(out(1, 1) == Complex(14.0, 0.0));
  CHECK(out(2, 2) == Complex(15.0, 0.0));
  CHECK(out(3, 3) == Complex(21.0, 0.0));
}

TEST_CASE("kron refuses to exceed the dimension cap") {
  const ComplexMatrix big = ComplexMatrix::identity(128);
  CHECK_THROWS_AS(kron(big, big), DimensionLimitError);
  CHECK_NOTHROW(kron(big, big, 128 * 128));
}

TEST_CASE("kron is associative on random triples") {
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = testing::random_hermitian(2 + (int)rng.below(2), rng);
    const ComplexMatrix b = testing::random_hermitian(2 + (int)rng.below(2), rng);
    const ComplexMatrix c = testing::random_hermitian(2 + (int)rng.below(2), rng);
    CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("trace is multiplicative over kron") {
  Rng rng(102);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexMatrix a = testing::random_hermitian(2 + (int)rng.below(4), rng);
    const ComplexMatrix b = testing::random_hermitian(2 + (int)rng.below(4), rng);
    const Complex lhs = kron(a, b).trace();
    const Complex rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("real_inner_trace matches the product trace") {
  Rng rng(103);
  const ComplexMatrix a = testing::random_hermitian(5, rng);
  const ComplexMatrix b = testing::random_hermitian(5, rng);
  CHECK(std::abs(real_inner_trace(a, b) - (a * b).trace().real()) <= 1e-12);
}

TEST_CASE("shape mismatches are parameter errors") {
  const ComplexMatrix a(2, 2);
  const ComplexMatrix b(3, 3);
  ComplexMatrix c(2, 2);
  CHECK_THROWS_AS(c += b, ParameterError);
  CHECK_THROWS_AS(a * b, ParameterError);
  CHECK_THROWS_AS(max_abs_diff(a, b), ParameterError);
  CHECK_THROWS_AS(ComplexMatrix(0, 3), ParameterError);
  CHECK_THROWS_AS(ComplexMatrix::from_rows({{1.0, 2.0}, {3.0}}), ParameterError);
}

TEST_CASE("non-finite entries are detected") {
  ComplexMatrix m(2, 2);
  CHECK(m.all_finite());
  m(0, 1) = Complex(std::nan(""), 0.0);
  CHECK(!m.all_finite());
}

TEST_CASE("adjoint and hermiticity deviation") {
  ComplexMatrix m = ComplexMatrix::from_rows({{Complex(1, 0), Complex(2, 3)},
                                              {Complex(2, -3), Complex(4, 0)}});
  CHECK(m.hermiticity_deviation() == 0.0);
  CHECK(max_abs_diff(m.adjoint(), m) == 0.0);
  m(0, 1) = Complex(2, 3.5);
  CHECK(m.hermiticity_deviation() == doctest::Approx(0.5).epsilon(1e-12));
}
