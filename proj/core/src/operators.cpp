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

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ccq/errors.hpp"
#include "ccq/spectral.hpp"

namespace ccq {

DensityValidationReport validate_density(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) {
    throw ParameterError("density operator must be square");
  }
  if (!m.all_finite()) {
    throw ValidationError("density operator has non-finite entries");
  }
  DensityValidationReport report;
  report.tol = tol;
  report.hermiticity_deviation = m.hermiticity_deviation();
  report.trace_deviation = std::abs(m.trace() - Complex(1.0, 0.0));
  if (report.hermiticity_deviation <= tol) {
    report.min_eigenvalue = min_eigenvalue(m, std::max(tol, kDefaultTol));
  } else {
    report.min_eigenvalue = -std::numeric_limits<double>::infinity();
  }
  report.pass = report.hermiticity_deviation <= tol && report.min_eigenvalue >= -tol &&
                report.trace_deviation <= tol;
  return report;
}

DensityOperator::DensityOperator(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
  const DensityValidationReport report = validate_density(matrix_, tol);
  if (!report.pass) {
    throw ValidationError("not a density operator: hermiticity " +
                          std::to_string(report.hermiticity_deviation) + ", min eigenvalue " +
                          std::to_string(report.min_eigenvalue) + ", trace deviation " +
                          std::to_string(report.trace_deviation));
  }
}

DensityOperator DensityOperator::from_valid(ComplexMatrix m) {
  return DensityOperator(std::move(m), Trusted{});
}

PovmEffect::PovmEffect(ComplexMatrix m, double tol) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw ParameterError("POVM effect must be square");
  }
  if (!matrix_.all_finite()) {
    throw ValidationError("POVM effect has non-finite entries");
  }
  const double herm = matrix_.hermiticity_deviation();
  if (herm > tol) {
    throw ValidationError("POVM effect deviates from Hermitian by " + std::to_string(herm));
  }
  const EigResult eig = hermitian_eig(matrix_, std::max(tol, kDefaultTol));
  const double lo = eig.eigenvalues.back();
  const double hi = eig.eigenvalues.front();
  if (lo < -tol || hi > 1.0 + tol) {
    throw ValidationError("POVM effect spectrum [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] escapes [0, 1]");
  }
}

PovmEffect PovmEffect::from_valid(ComplexMatrix m) { return PovmEffect(std::move(m), Trusted{}); }

PovmValidationReport validate_povm(const std::vector<ComplexMatrix>& effects, double tol) {
  if (effects.empty()) {
    throw ParameterError("POVM needs at least one effect");
  }
  const int dim = effects.front().rows();
  for (const ComplexMatrix& e : effects) {
    if (!e.is_square() || e.rows() != dim) {
      throw ParameterError("POVM effects must all be square with equal dimension");
    }
    if (!e.all_finite()) {
      throw ValidationError("POVM effect has non-finite entries");
    }
  }

  PovmValidationReport report;
  report.tol = tol;
  ComplexMatrix sum(dim, dim);
  for (const ComplexMatrix& e : effects) {
    EffectValidation ev;
    ev.hermiticity_deviation = e.hermiticity_deviation();
    if (ev.hermiticity_deviation <= tol) {
      const EigResult eig = hermitian_eig(e, std::max(tol, kDefaultTol));
      ev.min_eigenvalue = eig.eigenvalues.back();
      ev.max_eigenvalue = eig.eigenvalues.front();
    } else {
      ev.min_eigenvalue = -std::numeric_limits<double>::infinity();
      ev.max_eigenvalue = std::numeric_limits<double>::infinity();
    }
    ev.pass = ev.hermiticity_deviation <= tol && ev.min_eigenvalue >= -tol &&
              ev.max_eigenvalue <= 1.0 + tol;
    report.effects.push_back(ev);
    sum += e;
  }
  report.completeness_deviation = max_abs_diff(sum, ComplexMatrix::identity(dim));
  report.pass = report.completeness_deviation <= tol;
  for (const EffectValidation& ev : report.effects) {
    report.pass = report.pass && ev.pass;
  }
  return report;
}

Povm::Povm(std::vector<PovmEffect> effects, double completeness_tol)
    : effects_(std::move(effects)) {
  if (effects_.empty()) {
    throw ParameterError("POVM needs at least one effect");
  }
  const int dim = effects_.front().dim();
  for (const PovmEffect& e : effects_) {
    if (e.dim() != dim) {
      throw ParameterError("POVM effects must share one dimension");
    }
  }
  const double dev = completeness_deviation();
  if (dev > completeness_tol) {
    throw ValidationError("POVM completeness deviation " + std::to_string(dev) + " exceeds " +
                          std::to_string(completeness_tol));
  }
}

int Povm::dim() const {
  if (effects_.empty()) {
    throw ParameterError("empty POVM has no dimension");
  }
  return effects_.front().dim();
}

double Povm::completeness_deviation() const {
  ComplexMatrix sum(dim(), dim());
  for (const PovmEffect& e : effects_) {
    sum += e.matrix();
  }
  return max_abs_diff(sum, ComplexMatrix::identity(dim()));
}

}  // namespace ccq
