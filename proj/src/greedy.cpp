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

#include "covopt/greedy.hpp"

#include <queue>
#include <string>

#include "covopt/error.hpp"

namespace covopt {
namespace {

void check_inputs(const VisibilityCache& cache, std::size_t n_agents) {
  if (n_agents < 1) {
    throw Error(ErrorKind::kInvalidParameter, "agent count must be >= 1");
  }
  if (cache.size() == 0) {
    throw Error(ErrorKind::kEmptyCandidateSet, "greedy needs at least one candidate");
  }
}

}  // namespace

GreedyResult greedy_place(const VisibilityCache& cache, std::size_t n_agents) {
  check_inputs(cache, n_agents);
  GreedyResult result;
  result.constraint_slack = n_agents > cache.size();
  const std::size_t steps = std::min(n_agents, cache.size());

  ResidualProduct state(cache);
  std::vector<bool> selected(cache.size(), false);
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t best = cache.size();
    double best_gain = -1.0;
    for (std::size_t k = 0; k < cache.size(); ++k) {
      if (selected[k]) continue;
      const double g = state.gain(k);
      ++result.evaluations;
      if (g > best_gain) {
        best_gain = g;
        best = k;
      }
    }
    if (best_gain <= kGainEpsilon) {
      result.stopped_early = true;
      break;
    }
    selected[best] = true;
    state.add(best);
    result.chosen.push_back(best);
    result.gains.push_back(best_gain);
    result.objective_trace.push_back(state.value());
  }
  return result;
}

GreedyResult greedy_place_lazy(const VisibilityCache& cache,
                               std::size_t n_agents) {
  check_inputs(cache, n_agents);
  GreedyResult result;
  result.constraint_slack = n_agents > cache.size();
  const std::size_t steps = std::min(n_agents, cache.size());

  struct Entry {
    double bound;
    std::size_t index;
    std::size_t stamp;  // pick count when the bound was computed
  };
  // Largest bound first; equal bounds pop in index order.
  auto lower_priority = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.index > b.index;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(lower_priority)> queue(
      lower_priority);

  ResidualProduct state(cache);
  for (std::size_t k = 0; k < cache.size(); ++k) {
    queue.push({state.gain(k), k, 0});
    ++result.evaluations;
  }

  while (result.chosen.size() < steps) {
    Entry top = queue.top();
    queue.pop();
    if (top.stamp != result.chosen.size()) {
      top.bound = state.gain(top.index);
      top.stamp = result.chosen.size();
      ++result.evaluations;
      queue.push(top);
      continue;
    }
    if (top.bound <= kGainEpsilon) {
      result.stopped_early = true;
      break;
    }
    state.add(top.index);
    result.chosen.push_back(top.index);
    result.gains.push_back(top.bound);
    result.objective_trace.push_back(state.value());
  }
  return result;
}

}  // namespace covopt
