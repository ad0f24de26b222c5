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

#include <vector>

#include "ccq/complex_matrix.hpp"

namespace ccq {

struct EigResult {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // unitary; column j pairs with eigenvalues[j]
};

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Throws ValidationError if the input is not Hermitian within hermiticity_tol
/// and NumericalError if the sweep limit is exhausted.
EigResult hermitian_eig(const ComplexMatrix& m, double hermiticity_tol = kDefaultTol);

/// Pseudo-inverse square root on the support: eigenvalues <= tol map to 0,
/// the rest to 1/sqrt(lambda). Throws ValidationError when an eigenvalue is
/// below -tol (input not PSD).
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& m, double tol);

/// Projector onto the span of eigenvectors with eigenvalue > tol.
ComplexMatrix support_projector(const ComplexMatrix& m, double tol);

double min_eigenvalue(const ComplexMatrix& m, double hermiticity_tol = kDefaultTol);

}  // namespace ccq
