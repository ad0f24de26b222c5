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

#include <cstdint>
#include <vector>

namespace ccq {

struct LoberParams {
  double lambda = 0.0;   // subset weight fraction, in (0, 1)
  double epsilon = 0.0;  // pairwise-intersection fraction, in (0, 1)
};

/// Feasibility condition for exponentially large families:
/// epsilon * log2(1/lambda - 1) > 2.
bool lober_condition(const LoberParams& params);

/// Base-2 log of the guaranteed family size floor(lambda*M) - log2(M); kept
/// in the log domain because the count itself is exponential in M.
double lober_bound_log2(int m, double lambda);

/// Constant-weight subsets of [M] with bounded pairwise intersections:
/// |A_i| = weight for all i and |A_i cap A_j| <= intersection_cap for i != j.
/// Subsets are sorted, 0-based, pairwise distinct.
struct SubsetFamily {
  int ground_size = 0;
  int weight = 0;
  double intersection_cap = 0.0;
  std::vector<std::vector<int>> subsets;

  int count() const { return static_cast<int>(subsets.size()); }
};

/// Exact integer checks of every family invariant; throws ValidationError.
void validate_subset_family(const SubsetFamily& family);

struct FamilyBuildResult {
  SubsetFamily family;
  bool exhaustive = false;  // full enumeration vs seeded randomized greedy
  bool shortfall = false;   // found fewer than target_count subsets
  int target = 0;
  std::uint64_t seed = 0;
  double lambda = 0.0;
  double epsilon = 0.0;
};

/// Builds a family with weight floor(lambda*M) and cap epsilon*weight, up to
/// target_count subsets. Full enumeration with first-fit acceptance when
/// C(M, w) <= 1e5, otherwise seeded randomized greedy that stops after
/// 50*target_count consecutive rejections. Deterministic given the seed;
/// never returns a constraint-violating family.
FamilyBuildResult build_subset_family(int m, double lambda, double epsilon, int target_count,
                                      std::uint64_t seed);

/// Worst conflicting-pair overlap ratio of two families:
/// max over ordered ((m,n), (a,b)) with (m,n) != (a,b) of
/// |A_m cap A_a| * |B_n cap B_b| / (|A_m| |B_n|). This is the family-induced
/// part of the second-kind error bound.
double family_conflict_bound(const std::vector<std::vector<int>>& subsets_a,
                             const std::vector<std::vector<int>>& subsets_b);
double family_conflict_bound(const SubsetFamily& a, const SubsetFamily& b);

}  // namespace ccq
