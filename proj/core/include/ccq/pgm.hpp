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

#include "ccq/operators.hpp"

namespace ccq {

/// Square-root (pretty good) measurement for a list of states: with
/// S = sum rho_i, the effects are S^{-1/2} rho_i S^{-1/2} on the support of S,
/// and the off-support leftover identity - sum E_i is split equally across
/// all effects so the result is a complete POVM.
Povm build_square_root_measurement(const std::vector<ComplexMatrix>& states,
                                   double tol = kDefaultTol);

}  // namespace ccq
