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

#include <string>
#include <utility>

#include "ccq/errors.hpp"
#include "ccq/spectral.hpp"

namespace ccq {

Povm build_square_root_measurement(const std::vector<ComplexMatrix>& states, double tol) {
  if (states.empty()) {
    throw ParameterError("square-root measurement needs at least one state");
  }
  const int dim = states.front().rows();
  ComplexMatrix total(dim, dim);
  double total_trace = 0.0;
  for (const ComplexMatrix& rho : states) {
    if (!rho.is_square() || rho.rows() != dim) {
      throw ParameterError("square-root measurement states must share one square dimension");
    }
    total += rho;
    total_trace += rho.trace().real();
  }
  if (total_trace <= tol) {
    throw ParameterError("square-root measurement needs a state with positive trace");
  }

  const ComplexMatrix root = inv_sqrt_psd(total, tol);
  std::vector<ComplexMatrix> effects;
  effects.reserve(states.size());
  ComplexMatrix sum(dim, dim);
  for (const ComplexMatrix& rho : states) {
    ComplexMatrix e = root * rho * root;
    // Symmetrize away the roundoff skew of the two matrix products.
    ComplexMatrix h(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        h(i, j) = 0.5 * (e(i, j) + std::conj(e(j, i)));
      }
    }
    sum += h;
    effects.push_back(std::move(h));
  }

  // Off-support leftover, shared equally.
  ComplexMatrix leftover = ComplexMatrix::identity(dim) - sum;
  const Complex share(1.0 / static_cast<double>(states.size()), 0.0);
  std::vector<PovmEffect> out;
  out.reserve(effects.size());
  for (ComplexMatrix& e : effects) {
    e += share * leftover;
    out.push_back(PovmEffect::from_valid(std::move(e)));
  }
  return Povm(std::move(out));
}

}  // namespace ccq
