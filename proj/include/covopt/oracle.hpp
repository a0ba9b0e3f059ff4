// Copyright 2026 The Authors.
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

#ifndef COVOPT_ORACLE_HPP_
#define COVOPT_ORACLE_HPP_

#include <cstdint>
#include <ostream>
#include <vector>

#include "covopt/sensing.hpp"

namespace covopt {

inline constexpr std::uint64_t kDefaultSubsetCap = 2'000'000;
// Relative tolerance for every randomized property check.
inline constexpr double kViolationTolerance = 1e-9;

struct OracleResult {
  std::vector<std::size_t> best_subset;
  double best_value = 0.0;
  std::uint64_t subsets_evaluated = 0;
};

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Exact maximizer of H over all size-min(N, n) subsets. Ties keep the
// lexicographically first subset. Throws kInstanceTooLarge above `cap`.
OracleResult brute_force(const VisibilityCache& cache, std::size_t n_agents,
                         std::uint64_t cap = kDefaultSubsetCap);

struct PropertyReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t violations = 0;
  double max_violation = 0.0;  // largest amount by which an inequality failed
  std::size_t monotonicity_violations = 0;
  double max_monotonicity_violation = 0.0;
};

// Draws S subset-of T and k outside T; checks gain(S, k) >= gain(T, k) and
// H(S) <= H(T).
PropertyReport check_submodular(const VisibilityCache& cache, std::size_t trials,
                                std::uint64_t seed);

struct EquivalenceReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  // H(S u T) + H(S n T) <= H(S) + H(T).
  std::size_t lattice_violations = 0;
  double max_lattice_violation = 0.0;
  // Diminishing returns along the chain S n T subset-of S, elements of T \ S.
  std::size_t diminishing_violations = 0;
  double max_diminishing_violation = 0.0;
};

// Random (S, T) pairs over the first `ground_set_size` candidates.
EquivalenceReport check_definition_equivalence(const VisibilityCache& cache,
                                               std::size_t ground_set_size,
                                               std::size_t trials,
                                               std::uint64_t seed);

void write_report(std::ostream& out, const PropertyReport& report);
void write_report(std::ostream& out, const EquivalenceReport& report);

}  // namespace covopt

#endif  // COVOPT_ORACLE_HPP_
