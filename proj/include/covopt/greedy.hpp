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

#ifndef COVOPT_GREEDY_HPP_
#define COVOPT_GREEDY_HPP_

#include <cstddef>
#include <vector>

#include "covopt/sensing.hpp"

namespace covopt {

// Gains at or below this stop the greedy loop early.
inline constexpr double kGainEpsilon = 1e-12;

struct GreedyResult {
  std::vector<std::size_t> chosen;     // candidate indices, in pick order
  std::vector<double> gains;           // marginal gain of each pick
  std::vector<double> objective_trace; // H after each pick
  std::size_t evaluations = 0;         // marginal-gain evaluations
  bool stopped_early = false;          // remaining gains were all <= kGainEpsilon
  bool constraint_slack = false;       // N exceeded the candidate count

  double value() const {
    return objective_trace.empty() ? 0.0 : objective_trace.back();
  }
};

// Picks up to N candidates, each maximizing the marginal gain over the
// unselected ones. Ties go to the lowest candidate index.
GreedyResult greedy_place(const VisibilityCache& cache, std::size_t n_agents);

// Lazy evaluation with stale upper bounds. Returns the same picks and gains as
// greedy_place with fewer evaluations.
GreedyResult greedy_place_lazy(const VisibilityCache& cache, std::size_t n_agents);

}  // namespace covopt

#endif  // COVOPT_GREEDY_HPP_
