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

#include "covopt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "covopt/error.hpp"

namespace covopt {
namespace {

double tolerance(double reference) {
  return kViolationTolerance * std::max(1.0, std::abs(reference));
}

// Each element of [0, n) joins with probability 1/2.
std::vector<std::size_t> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> random_sub_of(const std::vector<std::size_t>& set,
                                       std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> out;
  for (std::size_t x : set) {
    if (coin(rng)) out.push_back(x);
  }
  return out;
}

}  // namespace

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

OracleResult brute_force(const VisibilityCache& cache, std::size_t n_agents,
                         std::uint64_t cap) {
  if (n_agents < 1) {
    throw Error(ErrorKind::kInvalidParameter, "agent count must be >= 1");
  }
  const std::size_t n = cache.size();
  const std::size_t k = std::min(n_agents, n);
  const std::uint64_t count = binomial(n, k);
  if (count > cap) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "C(" + std::to_string(n) + ", " + std::to_string(k) +
                    ") = " + std::to_string(count) + " subsets exceeds the cap of " +
                    std::to_string(cap));
  }

  OracleResult result;
  result.best_value = -1.0;
  std::vector<std::size_t> subset(k);
  for (std::size_t i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    const double value = cache.objective(subset);
    ++result.subsets_evaluated;
    if (value > result.best_value) {
      result.best_value = value;
      result.best_subset = subset;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return result;
}

PropertyReport check_submodular(const VisibilityCache& cache, std::size_t trials,
                                std::uint64_t seed) {
  if (trials < 1) {
    throw Error(ErrorKind::kInvalidParameter, "trials must be >= 1");
  }
  if (cache.size() < 1) {
    throw Error(ErrorKind::kEmptyCandidateSet, "submodularity check needs candidates");
  }
  PropertyReport report;
  report.seed = seed;
  report.trials = trials;
  std::mt19937_64 rng(seed);
  const std::size_t n = cache.size();

  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<std::size_t> big;
    std::vector<std::size_t> outside;
    do {
      big = random_subset(n, rng);
      outside.clear();
      for (std::size_t i = 0, b = 0; i < n; ++i) {
        if (b < big.size() && big[b] == i) {
          ++b;
        } else {
          outside.push_back(i);
        }
      }
    } while (outside.empty());
    const std::vector<std::size_t> small = random_sub_of(big, rng);
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    const std::size_t k = outside[pick(rng)];

    const double gain_small = cache.gain(small, k);
    const double gain_big = cache.gain(big, k);
    const double shortfall = gain_big - gain_small;
    if (shortfall > tolerance(gain_big)) {
      ++report.violations;
      report.max_violation = std::max(report.max_violation, shortfall);
    }
    const double h_small = cache.objective(small);
    const double h_big = cache.objective(big);
    const double drop = h_small - h_big;
    if (drop > tolerance(h_big)) {
      ++report.monotonicity_violations;
      report.max_monotonicity_violation =
          std::max(report.max_monotonicity_violation, drop);
    }
  }
  return report;
}

EquivalenceReport check_definition_equivalence(const VisibilityCache& cache,
                                               std::size_t ground_set_size,
                                               std::size_t trials,
                                               std::uint64_t seed) {
  if (ground_set_size < 1 || ground_set_size > cache.size()) {
    throw Error(ErrorKind::kInvalidParameter,
                "ground set size must be in [1, " + std::to_string(cache.size()) +
                    "], got " + std::to_string(ground_set_size));
  }
  EquivalenceReport report;
  report.seed = seed;
  report.trials = trials;
  std::mt19937_64 rng(seed);

  for (std::size_t t = 0; t < trials; ++t) {
    const auto s = random_subset(ground_set_size, rng);
    const auto u = random_subset(ground_set_size, rng);
    std::vector<std::size_t> both;
    std::vector<std::size_t> either;
    std::set_intersection(s.begin(), s.end(), u.begin(), u.end(),
                          std::back_inserter(both));
    std::set_union(s.begin(), s.end(), u.begin(), u.end(),
                   std::back_inserter(either));

    const double lhs = cache.objective(either) + cache.objective(both);
    const double rhs = cache.objective(s) + cache.objective(u);
    if (lhs - rhs > tolerance(rhs)) {
      ++report.lattice_violations;
      report.max_lattice_violation = std::max(report.max_lattice_violation, lhs - rhs);
    }

    // Each y in T \ S must gain at least as much on S n T as on S.
    for (std::size_t y : u) {
      if (std::binary_search(s.begin(), s.end(), y)) continue;
      const double gain_small = cache.gain(both, y);
      const double gain_big = cache.gain(s, y);
      if (gain_big - gain_small > tolerance(gain_big)) {
        ++report.diminishing_violations;
        report.max_diminishing_violation =
            std::max(report.max_diminishing_violation, gain_big - gain_small);
      }
    }
  }
  return report;
}

void write_report(std::ostream& out, const PropertyReport& report) {
  out << "check,seed,trials,violations,max_violation\n";
  out << "submodularity," << report.seed << ',' << report.trials << ','
      << report.violations << ',' << report.max_violation << '\n';
  out << "monotonicity," << report.seed << ',' << report.trials << ','
      << report.monotonicity_violations << ','
      << report.max_monotonicity_violation << '\n';
}

void write_report(std::ostream& out, const EquivalenceReport& report) {
  out << "check,seed,trials,violations,max_violation\n";
  out << "lattice," << report.seed << ',' << report.trials << ','
      << report.lattice_violations << ',' << report.max_lattice_violation << '\n';
  out << "diminishing_returns," << report.seed << ',' << report.trials << ','
      << report.diminishing_violations << ','
      << report.max_diminishing_violation << '\n';
}

}  // namespace covopt
