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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poi/instance.hpp"

namespace poi {

enum class RuleName {
  kGreedyAdditive,
  kKnapsackRatio,
  kSetCoverGreedy,
  kSetCoverPrimalDual,
  kFacilityJmmsv,
  kPcstModifiedGw,
  kFvsDegreeWeight,
};

std::string rule_name_string(RuleName name);
RuleName rule_name_from_string(const std::string& s);

// Per-run mutable state of a rule. Owns the selected-set bookkeeping so the
// marginal can be evaluated against the committed prefix.
class RuleState {
 public:
  virtual ~RuleState() = default;

  ElementMask selected() const { return selected_; }

 protected:
  friend class FrugalRule;
  ElementMask selected_ = 0;
};

// An irrevocable selection procedure driven by a marginal-value priority.
// Packing rules have priorities nondecreasing in the element's own weight;
// covering rules nonincreasing. `next_selection` is the argmax step shared by
// the Free-Info runs (weights = realized surrogates) and the PoI runs
// (weights = grades for unprobed elements); rules whose priority cannot be
// written pointwise (the moat-growing PCST rule) override it.
class FrugalRule {
 public:
  virtual ~FrugalRule() = default;

  virtual RuleName name() const = 0;
  virtual bool supports(const PoiInstance& inst) const = 0;

  virtual std::unique_ptr<RuleState> make_state(
      const PoiInstance& inst) const = 0;

  // The scalar priority of element `elem` at candidate weight `y`.
  virtual double marginal(const PoiInstance& inst, const RuleState& state,
                          int elem, double y) const = 0;

  // Select `elem` (with weight `y`) into the state, irrevocably.
  virtual void commit(const PoiInstance& inst, RuleState& state, int elem,
                      double y) const;

  // The element the run would select next under `weights`, or nullopt to
  // stop. `known` marks elements whose weight is final (probed); Free-Info
  // runs pass the full mask. Default: argmax of positive marginals,
  // feasibility-gated for packing, lexicographic (= lowest index) tie-break.
  virtual std::optional<int> next_selection(const PoiInstance& inst,
                                            RuleState& state,
                                            const std::vector<double>& weights,
                                            ElementMask known) const;

 protected:
  virtual void on_commit(const PoiInstance& inst, RuleState& state, int elem,
                         double y) const = 0;
};

// Registry of the built-in rules. Throws MismatchError when the rule does not
// support the instance's direction/constraint/objective combination.
const FrugalRule& frugal_rule(RuleName name);
void check_rule(const FrugalRule& rule, const PoiInstance& inst);

// Algorithm runs in the Free-Info world: weights are realized surrogate
// values (packing weights may be negative; covering weights must be >= 0).
ElementMask run_frugal_packing(const PoiInstance& inst,
                               const std::vector<double>& weights,
                               RuleName rule);
ElementMask run_frugal_covering(const PoiInstance& inst,
                                const std::vector<double>& weights,
                                RuleName rule);

// Spec-facing marginal: priority of `elem` at weight `y` given a state.
double rule_marginal(const PoiInstance& inst, RuleName rule,
                     const RuleState& state, int elem, double y);

}  // namespace poi
