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

#include "ccq/subset_family.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "ccq/errors.hpp"
#include "ccq/rng.hpp"

namespace ccq {

namespace {

// Guards floor(lambda*M) against products like 0.3*10 = 2.999...96.
constexpr double kFloorNudge = 1e-9;

constexpr double kEnumerationLimit = 1e5;  // exhaustive search when C(M, w) is below this

int floor_weight(int m, double lambda) {
  return static_cast<int>(std::floor(lambda * m + kFloorNudge));
}

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) {
    v *= static_cast<double>(n - k + i) / i;
  }
  return v;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool compatible(const std::vector<int>& candidate, const std::vector<std::vector<int>>& kept,
                double cap) {
  for (const std::vector<int>& s : kept) {
    if (candidate == s || intersection_size(candidate, s) > cap) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool lober_condition(const LoberParams& params) {
  if (!(params.lambda > 0.0 && params.lambda < 1.0)) {
    throw ParameterError("lambda must lie in (0, 1), got " + std::to_string(params.lambda));
  }
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1), got " + std::to_string(params.epsilon));
  }
  return params.epsilon * std::log2(1.0 / params.lambda - 1.0) > 2.0;
}

double lober_bound_log2(int m, double lambda) {
  if (m < 1) {
    throw ParameterError("ground size M must be >= 1");
  }
  return static_cast<double>(floor_weight(m, lambda)) - std::log2(static_cast<double>(m));
}

void validate_subset_family(const SubsetFamily& family) {
  if (family.ground_size < 1) {
    throw ValidationError("family ground size must be >= 1");
  }
  if (family.weight < 1 || family.weight > family.ground_size) {
    throw ValidationError("family weight " + std::to_string(family.weight) +
                          " outside [1, M = " + std::to_string(family.ground_size) + "]");
  }
  for (const std::vector<int>& s : family.subsets) {
    if (static_cast<int>(s.size()) != family.weight) {
      throw ValidationError("subset cardinality " + std::to_string(s.size()) +
                            " differs from weight " + std::to_string(family.weight));
    }
    if (!std::is_sorted(s.begin(), s.end())) {
      throw ValidationError("subsets must be sorted");
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= family.ground_size || (i > 0 && s[i] == s[i - 1])) {
        throw ValidationError("subset element out of range or repeated");
      }
    }
  }
  for (std::size_t i = 0; i < family.subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < family.subsets.size(); ++j) {
      if (family.subsets[i] == family.subsets[j]) {
        throw ValidationError("family contains duplicate subsets");
      }
      const int overlap = intersection_size(family.subsets[i], family.subsets[j]);
      if (static_cast<double>(overlap) > family.intersection_cap) {
        throw ValidationError("subsets " + std::to_string(i) + " and " + std::to_string(j) +
                              " intersect in " + std::to_string(overlap) + " > cap " +
                              std::to_string(family.intersection_cap));
      }
    }
  }
}

FamilyBuildResult build_subset_family(int m, double lambda, double epsilon, int target_count,
                                      std::uint64_t seed) {
  if (m < 1) {
    throw ParameterError("ground size M must be >= 1");
  }
  if (target_count < 1) {
    throw ParameterError("target_count must be >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw ParameterError("epsilon must be positive");
  }
  const int weight = floor_weight(m, lambda);
  if (weight < 1 || weight > m) {
    throw ParameterError("infeasible weight floor(lambda*M) = " + std::to_string(weight) +
                         " for M = " + std::to_string(m));
  }

  FamilyBuildResult result;
  result.target = target_count;
  result.seed = seed;
  result.lambda = lambda;
  result.epsilon = epsilon;
  result.family.ground_size = m;
  result.family.weight = weight;
  result.family.intersection_cap = epsilon * weight;
  std::vector<std::vector<int>>& kept = result.family.subsets;
  const double cap = result.family.intersection_cap;

  result.exhaustive = binomial(m, weight) <= kEnumerationLimit;
  if (result.exhaustive) {
    // Lexicographic enumeration, first-fit acceptance.
    std::vector<int> candidate(weight);
    std::iota(candidate.begin(), candidate.end(), 0);
    while (static_cast<int>(kept.size()) < target_count) {
      if (compatible(candidate, kept, cap)) {
        kept.push_back(candidate);
      }
      // next combination
      int pos = weight - 1;
      while (pos >= 0 && candidate[pos] == m - weight + pos) {
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++candidate[pos];
      for (int i = pos + 1; i < weight; ++i) {
        candidate[i] = candidate[i - 1] + 1;
      }
    }
  } else {
    Rng rng(seed);
    std::vector<int> ground(m);
    std::iota(ground.begin(), ground.end(), 0);
    const long long rejection_budget = 50LL * target_count;
    long long consecutive_rejections = 0;
    while (static_cast<int>(kept.size()) < target_count &&
           consecutive_rejections < rejection_budget) {
      // Partial Fisher-Yates: the first `weight` entries become the sample.
      for (int i = 0; i < weight; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(m - i)));
        std::swap(ground[i], ground[j]);
      }
      std::vector<int> candidate(ground.begin(), ground.begin() + weight);
      std::sort(candidate.begin(), candidate.end());
      if (compatible(candidate, kept, cap)) {
        kept.push_back(candidate);
        consecutive_rejections = 0;
      } else {
        ++consecutive_rejections;
      }
    }
  }

  result.shortfall = static_cast<int>(kept.size()) < target_count;
  return result;
}

double family_conflict_bound(const std::vector<std::vector<int>>& subsets_a,
                             const std::vector<std::vector<int>>& subsets_b) {
  const int m_count = static_cast<int>(subsets_a.size());
  const int n_count = static_cast<int>(subsets_b.size());
  if (m_count < 1 || n_count < 1) {
    throw ParameterError("family_conflict_bound needs non-empty families");
  }
  if (m_count * n_count < 2) {
    throw ParameterError("family_conflict_bound needs at least two message pairs");
  }
  for (const auto& s : subsets_a) {
    if (s.empty()) {
      throw ParameterError("family_conflict_bound: empty subset");
    }
  }
  for (const auto& s : subsets_b) {
    if (s.empty()) {
      throw ParameterError("family_conflict_bound: empty subset");
    }
  }

  std::vector<std::vector<int>> ia(m_count, std::vector<int>(m_count));
  for (int i = 0; i < m_count; ++i) {
    for (int j = 0; j < m_count; ++j) {
      ia[i][j] = intersection_size(subsets_a[i], subsets_a[j]);
    }
  }
  std::vector<std::vector<int>> ib(n_count, std::vector<int>(n_count));
  for (int i = 0; i < n_count; ++i) {
    for (int j = 0; j < n_count; ++j) {
      ib[i][j] = intersection_size(subsets_b[i], subsets_b[j]);
    }
  }

  double worst = 0.0;
  for (int m = 0; m < m_count; ++m) {
    for (int n = 0; n < n_count; ++n) {
      const double denom = static_cast<double>(subsets_a[m].size()) * subsets_b[n].size();
      for (int a = 0; a < m_count; ++a) {
        for (int b = 0; b < n_count; ++b) {
          if (a == m && b == n) {
            continue;
          }
          worst = std::max(worst, (static_cast<double>(ia[m][a]) * ib[n][b]) / denom);
        }
      }
    }
  }
  return worst;
}

double family_conflict_bound(const SubsetFamily& a, const SubsetFamily& b) {
  return family_conflict_bound(a.subsets, b.subsets);
}

}  // namespace ccq
