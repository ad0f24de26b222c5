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

struct DensityValidationReport {
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double trace_deviation = 0.0;  // |tr - 1|
  double tol = kDefaultTol;
  bool pass = false;
};

/// Checks Hermiticity, positivity and unit trace of a candidate state.
/// Non-square or non-finite input throws; everything else lands in the report.
DensityValidationReport validate_density(const ComplexMatrix& m, double tol = kDefaultTol);

// A quantum state: Hermitian, PSD, unit-trace matrix. The checked constructor
// runs the full spectral validation; from_valid skips it for matrices that are
// valid by construction (tensor products of valid states, spectral rebuilds).
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m, double tol = kDefaultTol);
  static DensityOperator from_valid(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.rows(); }

 private:
  struct Trusted {};
  DensityOperator(ComplexMatrix m, Trusted) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

// A measurement effect: Hermitian with spectrum in [0, 1].
class PovmEffect {
 public:
  explicit PovmEffect(ComplexMatrix m, double tol = kDefaultTol);
  static PovmEffect from_valid(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return matrix_; }
  int dim() const { return matrix_.rows(); }

 private:
  struct Trusted {};
  PovmEffect(ComplexMatrix m, Trusted) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

struct EffectValidation {
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool pass = false;
};

struct PovmValidationReport {
  std::vector<EffectValidation> effects;
  double completeness_deviation = 0.0;  // ||sum - identity||_max
  double tol = kDefaultTol;
  bool pass = false;
};

/// Per-effect Hermiticity/positivity deviations plus the completeness
/// deviation of the sum. Passes iff every deviation is within tol.
PovmValidationReport validate_povm(const std::vector<ComplexMatrix>& effects,
                                   double tol = kDefaultTol);

// An ordered POVM: effects of equal dimension summing to the identity. Only
// the (cheap) completeness condition is re-checked on construction; the
// per-effect spectra are the effects' own responsibility. A default
// constructed Povm is an empty placeholder.
class Povm {
 public:
  Povm() = default;
  explicit Povm(std::vector<PovmEffect> effects, double completeness_tol = kDefaultTol);

  std::size_t size() const { return effects_.size(); }
  int dim() const;
  const PovmEffect& effect(std::size_t i) const { return effects_[i]; }
  const std::vector<PovmEffect>& effects() const { return effects_; }

  double completeness_deviation() const;

 private:
  std::vector<PovmEffect> effects_;
};

}  // namespace ccq
