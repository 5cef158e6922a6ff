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

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "poi/frugal.hpp"
#include "poi/instance.hpp"

namespace poi {

struct StrategyStep {
  enum class Kind { kProbe, kSelect };
  Kind kind;
  std::string id;
  double value = 0;  // realized value (probe steps)
  double price = 0;  // price paid (probe steps)
};

// One strategy run. For packing, utility = val(selected, X) - prices paid;
// for covering it holds the disutility = cost(selected, X) + prices paid.
struct StrategyTrace {
  std::vector<StrategyStep> steps;
  ElementMask final_selected = 0;
  double utility = 0;

  int probes() const;
  int selections() const;
};

// Algorithm runs in the PoI world. `outcome` assigns a realized value to
// every element; the strategy reads an entry only when it probes it.
StrategyTrace run_poi_packing(const PoiInstance& inst, RuleName rule,
                              const std::vector<double>& outcome);
StrategyTrace run_poi_covering(const PoiInstance& inst, RuleName rule,
                               const std::vector<double>& outcome);

// Baseline for rank-1 instances: repeatedly open the box with the best
// myopic marginal E[(X - curr)^+] - price while it is positive, then keep
// the best probed value.
StrategyTrace naive_greedy_pandora(const PoiInstance& inst,
                                   const std::vector<double>& outcome);

// A named adaptive strategy: a trace per outcome vector. `coin` feeds
// strategies with internal randomness (the knapsack mixture).
struct Strategy {
  std::string name;
  std::function<StrategyTrace(const std::vector<double>& outcome, double coin)>
      run;
  // Exact expected utility/disutility; enumeration for single rules, branch
  // averaging for mixtures.
  std::function<double(std::uint64_t outcome_cap)> exact;
};

// Throws MismatchError when the strategy does not fit the instance.
// Names: "frugal:<rule>", "weitzman", "naive-greedy", "knapsack-mixture".
Strategy make_strategy(const std::string& name, const PoiInstance& inst);

struct TrialRow {
  double utility = 0;
  int probes = 0;
  int selections = 0;
};

struct SimulationReport {
  std::uint64_t trials = 0;
  double mean = 0;
  double stderr_of_mean = 0;
  std::uint64_t seed = 0;
  std::vector<TrialRow> rows;  // filled when keep_rows
};

SimulationReport simulate(const PoiInstance& inst, const Strategy& strategy,
                          std::uint64_t trials, std::uint64_t seed,
                          bool keep_rows = false, int threads = 1);

constexpr std::uint64_t kDefaultOutcomeCap = 1'000'000;

// Exact expectation of the run_poi_* utility by enumerating all outcome
// vectors. Throws CapExceededError past `outcome_cap` states.
double exact_expected_utility(const PoiInstance& inst, RuleName rule,
                              std::uint64_t outcome_cap = kDefaultOutcomeCap);

// Enumerates outcome vectors: calls fn(outcome values, probability).
void for_each_outcome(
    const PoiInstance& inst, std::uint64_t outcome_cap,
    const std::function<void(const std::vector<double>&, double)>& fn);

// Outcome vector for one Monte-Carlo trial under the counter RNG.
std::vector<double> sample_outcome(const PoiInstance& inst,
                                   const CounterRng& rng, std::uint64_t trial);

}  // namespace poi
