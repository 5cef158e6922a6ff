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

#include "poi/frugal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "poi/errors.hpp"

namespace poi {

// Defined in pcst.cpp.
const FrugalRule& pcst_rule();

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Priority of a set that is already dual-tight: selected before any raise.
constexpr double kTightPriority = 1e18;
constexpr double kDualTol = 1e-9;

double safe_reciprocal(double y) { return y > 0 ? 1.0 / y : kInf; }

}  // namespace

std::string rule_name_string(RuleName name) {
  switch (name) {
    case RuleName::kGreedyAdditive: return "greedy-additive";
    case RuleName::kKnapsackRatio: return "knapsack-ratio";
    case RuleName::kSetCoverGreedy: return "set-cover-greedy";
    case RuleName::kSetCoverPrimalDual: return "set-cover-primal-dual";
    case RuleName::kFacilityJmmsv: return "facility-jmmsv";
    case RuleName::kPcstModifiedGw: return "pcst-gw";
    case RuleName::kFvsDegreeWeight: return "fvs-degree-weight";
  }
  return "?";
}

RuleName rule_name_from_string(const std::string& s) {
  for (RuleName r :
       {RuleName::kGreedyAdditive, RuleName::kKnapsackRatio,
        RuleName::kSetCoverGreedy, RuleName::kSetCoverPrimalDual,
        RuleName::kFacilityJmmsv, RuleName::kPcstModifiedGw,
        RuleName::kFvsDegreeWeight}) {
    if (rule_name_string(r) == s) return r;
  }
  throw LookupError("unknown frugal rule: " + s);
}

void FrugalRule::commit(const PoiInstance& inst, RuleState& state, int elem,
                        double y) const {
  state.selected_ |= element_bit(elem);
  on_commit(inst, state, elem, y);
}

std::optional<int> FrugalRule::next_selection(
    const PoiInstance& inst, RuleState& state,
    const std::vector<double>& weights, ElementMask /*known*/) const {
  bool packing = inst.direction() == Direction::kPacking;
  int best = -1;
  double best_v = 0;
  for (int i = 0; i < inst.size(); ++i) {
    if (mask_has(state.selected(), i)) continue;
    if (packing &&
        !inst.constraint().is_independent(state.selected() | element_bit(i))) {
      continue;
    }
    double v = marginal(inst, state, i, weights[i]);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

// ---------------------------------------------------------------------------
// greedy-additive: g = y for packing; the matroid-basis greedy (1/y gated on
// rank extension) for covering.

class GreedyAdditiveState : public RuleState {};

class GreedyAdditiveRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kGreedyAdditive; }

  bool supports(const PoiInstance& inst) const override {
    if (inst.objective().get_if<AdditiveObjective>() == nullptr) return false;
    if (inst.direction() == Direction::kPacking) return true;
    return inst.constraint().is_matroid_kind();
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance&) const override {
    return std::make_unique<GreedyAdditiveState>();
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    if (inst.direction() == Direction::kPacking) return y;
    ElementMask m = state.selected();
    if (inst.constraint().rank(m | element_bit(elem)) ==
        inst.constraint().rank(m)) {
      return 0;
    }
    return safe_reciprocal(y);
  }

 protected:
  void on_commit(const PoiInstance&, RuleState&, int, double) const override {}
};

// ---------------------------------------------------------------------------
// knapsack-ratio: g = y / size with residual-capacity feasibility.

class KnapsackRatioState : public RuleState {
 public:
  double used = 0;
};

class KnapsackRatioRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kKnapsackRatio; }

  bool supports(const PoiInstance& inst) const override {
    return inst.direction() == Direction::kPacking &&
           inst.constraint().get_if<KnapsackConstraint>() != nullptr &&
           inst.objective().get_if<AdditiveObjective>() != nullptr;
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance&) const override {
    return std::make_unique<KnapsackRatioState>();
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    const auto& st = static_cast<const KnapsackRatioState&>(state);
    const auto* k = inst.constraint().get_if<KnapsackConstraint>();
    if (st.used + k->sizes[elem] > k->capacity + 1e-12) return 0;
    return y > 0 ? y / k->sizes[elem] : 0;
  }

 protected:
  void on_commit(const PoiInstance& inst, RuleState& state, int elem,
                 double) const override {
    auto& st = static_cast<KnapsackRatioState&>(state);
    st.used += inst.constraint().get_if<KnapsackConstraint>()->sizes[elem];
  }
};

// ---------------------------------------------------------------------------
// set-cover-greedy: g = (newly covered)/y.

class SetCoverGreedyState : public RuleState {
 public:
  std::vector<bool> covered;
};

class SetCoverGreedyRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kSetCoverGreedy; }

  bool supports(const PoiInstance& inst) const override {
    return inst.direction() == Direction::kCovering &&
           inst.constraint().get_if<SetCoverFeasibility>() != nullptr &&
           inst.objective().get_if<AdditiveObjective>() != nullptr;
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance& inst) const override {
    auto st = std::make_unique<SetCoverGreedyState>();
    st->covered.assign(
        inst.constraint().get_if<SetCoverFeasibility>()->universe.size(),
        false);
    return st;
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    const auto& st = static_cast<const SetCoverGreedyState&>(state);
    const auto* c = inst.constraint().get_if<SetCoverFeasibility>();
    int fresh = 0;
    for (int u : c->covers[elem]) fresh += !st.covered[u];
    if (fresh == 0) return 0;
    return y > 0 ? fresh / y : kInf;
  }

 protected:
  void on_commit(const PoiInstance& inst, RuleState& state, int elem,
                 double) const override {
    auto& st = static_cast<SetCoverGreedyState&>(state);
    const auto* c = inst.constraint().get_if<SetCoverFeasibility>();
    for (int u : c->covers[elem]) st.covered[u] = true;
  }
};

// ---------------------------------------------------------------------------
// set-cover-primal-dual: raise the dual of the first uncovered ground element
// in lexicographic order until a set goes tight; tight sets are selected
// immediately. The priority of a set containing that ground element is the
// reciprocal of its residual slack.

class SetCoverPrimalDualState : public RuleState {
 public:
  std::vector<bool> covered;
  std::vector<double> duals;    // per universe point
  std::vector<double> charges;  // per set: sum of duals of its points
  std::vector<bool> tight;

  int first_uncovered() const {
    for (std::size_t u = 0; u < covered.size(); ++u) {
      if (!covered[u]) return static_cast<int>(u);
    }
    return -1;
  }
};

class SetCoverPrimalDualRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kSetCoverPrimalDual; }

  bool supports(const PoiInstance& inst) const override {
    return inst.direction() == Direction::kCovering &&
           inst.constraint().get_if<SetCoverFeasibility>() != nullptr &&
           inst.objective().get_if<AdditiveObjective>() != nullptr;
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance& inst) const override {
    auto st = std::make_unique<SetCoverPrimalDualState>();
    const auto* c = inst.constraint().get_if<SetCoverFeasibility>();
    st->covered.assign(c->universe.size(), false);
    st->duals.assign(c->universe.size(), 0);
    st->charges.assign(inst.size(), 0);
    st->tight.assign(inst.size(), false);
    return st;
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    const auto& st = static_cast<const SetCoverPrimalDualState&>(state);
    const auto* c = inst.constraint().get_if<SetCoverFeasibility>();
    int u = st.first_uncovered();
    if (u < 0) return 0;
    double slack = y - st.charges[elem];
    if (st.tight[elem] || slack <= kDualTol) return kTightPriority;
    const auto& pts = c->covers[elem];
    if (!std::binary_search(pts.begin(), pts.end(), u)) return 0;
    return 1.0 / slack;
  }

 protected:
  void on_commit(const PoiInstance& inst, RuleState& state, int elem,
                 double y) const override {
    auto& st = static_cast<SetCoverPrimalDualState&>(state);
    const auto* c = inst.constraint().get_if<SetCoverFeasibility>();
    double slack = y - st.charges[elem];
    if (!st.tight[elem] && slack > kDualTol) {
      // The raise step: push the current ground element's dual until this
      // set goes tight; every set containing it gains that much charge.
      int u = st.first_uncovered();
      st.duals[u] += slack;
      for (int i = 0; i < inst.size(); ++i) {
        const auto& pts = c->covers[i];
        if (std::binary_search(pts.begin(), pts.end(), u)) {
          st.charges[i] += slack;
        }
      }
    }
    st.tight[elem] = true;
    for (int u : c->covers[elem]) st.covered[u] = true;
  }
};

// ---------------------------------------------------------------------------
// facility-jmmsv: stars greedy. The priority of an unopened facility is the
// best clients-per-cost ratio over prefixes of its unconnected clients sorted
// by distance; opened facilities may keep absorbing clients at zero opening
// cost, which selects no new element and is handled in next_selection.

class FacilityJmmsvState : public RuleState {
 public:
  std::vector<bool> connected;  // per client position
  ElementMask opened = 0;
};

class FacilityJmmsvRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kFacilityJmmsv; }

  bool supports(const PoiInstance& inst) const override {
    return inst.direction() == Direction::kCovering &&
           inst.objective().get_if<FacilityLocationObjective>() != nullptr;
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance& inst) const override {
    auto st = std::make_unique<FacilityJmmsvState>();
    st->connected.assign(
        inst.objective().get_if<FacilityLocationObjective>()->clients.size(),
        false);
    return st;
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    const auto& st = static_cast<const FacilityJmmsvState&>(state);
    return best_star(inst, st, elem, y).first;
  }

  std::optional<int> next_selection(const PoiInstance& inst, RuleState& state,
                                    const std::vector<double>& weights,
                                    ElementMask /*known*/) const override {
    auto& st = static_cast<FacilityJmmsvState&>(state);
    for (;;) {
      // Best zero-opening-cost move on an already opened facility.
      double best_open = 0;
      int best_open_fac = -1;
      for (int i = 0; i < inst.size(); ++i) {
        if (!mask_has(st.opened, i)) continue;
        double r = best_star(inst, st, i, 0).first;
        if (r > best_open) {
          best_open = r;
          best_open_fac = i;
        }
      }
      double best_new = 0;
      int best_new_fac = -1;
      for (int i = 0; i < inst.size(); ++i) {
        if (mask_has(st.selected(), i)) continue;
        double r = best_star(inst, st, i, weights[i]).first;
        if (r > best_new) {
          best_new = r;
          best_new_fac = i;
        }
      }
      if (best_open_fac >= 0 && best_open >= best_new) {
        connect_star(inst, st, best_open_fac, 0);
        continue;
      }
      if (best_new_fac < 0) return std::nullopt;
      return best_new_fac;
    }
  }

 protected:
  void on_commit(const PoiInstance& inst, RuleState& state, int elem,
                 double y) const override {
    auto& st = static_cast<FacilityJmmsvState&>(state);
    st.opened |= element_bit(elem);
    connect_star(inst, st, elem, y);
  }

 private:
  // Returns (ratio, star size) of the best prefix of unconnected clients.
  std::pair<double, int> best_star(const PoiInstance& inst,
                                   const FacilityJmmsvState& st, int elem,
                                   double cost) const {
    const auto* f = inst.objective().get_if<FacilityLocationObjective>();
    std::vector<double> dists;
    for (std::size_t c = 0; c < f->clients.size(); ++c) {
      if (!st.connected[c]) {
        dists.push_back(f->dist[f->clients[c]][f->facility_point[elem]]);
      }
    }
    std::sort(dists.begin(), dists.end());
    double best = 0;
    int best_k = 0;
    double sum = cost;
    for (std::size_t k = 0; k < dists.size(); ++k) {
      sum += dists[k];
      double r = sum > 0 ? (k + 1) / sum : kInf;
      if (r > best) {
        best = r;
        best_k = static_cast<int>(k + 1);
      }
    }
    return {best, best_k};
  }

  void connect_star(const PoiInstance& inst, FacilityJmmsvState& st, int elem,
                    double cost) const {
    const auto* f = inst.objective().get_if<FacilityLocationObjective>();
    auto [ratio, k] = best_star(inst, st, elem, cost);
    if (k == 0) return;
    // Connect the k nearest unconnected clients; ties by client position.
    std::vector<std::pair<double, int>> order;
    for (std::size_t c = 0; c < f->clients.size(); ++c) {
      if (!st.connected[c]) {
        order.emplace_back(f->dist[f->clients[c]][f->facility_point[elem]],
                           static_cast<int>(c));
      }
    }
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& a, const auto& b) {
                       return a.first < b.first;
                     });
    for (int j = 0; j < k; ++j) st.connected[order[j].second] = true;
  }
};

// ---------------------------------------------------------------------------
// fvs-degree-weight: after peeling degree <= 1 vertices, priority is
// degree/weight in the remaining graph.

class FvsState : public RuleState {
 public:
  std::vector<bool> present;  // in the residual graph
};

class FvsDegreeWeightRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kFvsDegreeWeight; }

  bool supports(const PoiInstance& inst) const override {
    return inst.direction() == Direction::kCovering &&
           inst.constraint().get_if<FvsFeasibility>() != nullptr &&
           inst.objective().get_if<AdditiveObjective>() != nullptr;
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance& inst) const override {
    auto st = std::make_unique<FvsState>();
    const auto* f = inst.constraint().get_if<FvsFeasibility>();
    st->present.assign(f->graph.vertices.size(), true);
    peel(*f, *st);
    return st;
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    const auto& st = static_cast<const FvsState&>(state);
    const auto* f = inst.constraint().get_if<FvsFeasibility>();
    int v = f->vertex_of_element[elem];
    if (!st.present[v]) return 0;
    int deg = f->graph.degrees(st.present)[v];
    if (deg == 0) return 0;
    return y > 0 ? deg / y : kInf;
  }

 protected:
  void on_commit(const PoiInstance& inst, RuleState& state, int elem,
                 double) const override {
    auto& st = static_cast<FvsState&>(state);
    const auto* f = inst.constraint().get_if<FvsFeasibility>();
    st.present[f->vertex_of_element[elem]] = false;
    peel(*f, st);
  }

 private:
  static void peel(const FvsFeasibility& f, FvsState& st) {
    for (bool changed = true; changed;) {
      changed = false;
      auto deg = f.graph.degrees(st.present);
      for (std::size_t v = 0; v < st.present.size(); ++v) {
        if (st.present[v] && deg[v] <= 1) {
          st.present[v] = false;
          changed = true;
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------

const FrugalRule& frugal_rule(RuleName name) {
  static const GreedyAdditiveRule greedy;
  static const KnapsackRatioRule knapsack;
  static const SetCoverGreedyRule sc_greedy;
  static const SetCoverPrimalDualRule sc_pd;
  static const FacilityJmmsvRule facility;
  static const FvsDegreeWeightRule fvs;
  switch (name) {
    case RuleName::kGreedyAdditive: return greedy;
    case RuleName::kKnapsackRatio: return knapsack;
    case RuleName::kSetCoverGreedy: return sc_greedy;
    case RuleName::kSetCoverPrimalDual: return sc_pd;
    case RuleName::kFacilityJmmsv: return facility;
    case RuleName::kPcstModifiedGw: return pcst_rule();
    case RuleName::kFvsDegreeWeight: return fvs;
  }
  throw LookupError("unknown rule");
}

void check_rule(const FrugalRule& rule, const PoiInstance& inst) {
  if (!rule.supports(inst)) {
    throw MismatchError("rule " + rule_name_string(rule.name()) +
                        " does not support this instance");
  }
}

ElementMask run_frugal_packing(const PoiInstance& inst,
                               const std::vector<double>& weights,
                               RuleName rule_name) {
  if (inst.direction() != Direction::kPacking) {
    throw MismatchError("run_frugal_packing needs a packing instance");
  }
  const FrugalRule& rule = frugal_rule(rule_name);
  check_rule(rule, inst);
  auto state = rule.make_state(inst);
  while (auto j = rule.next_selection(inst, *state, weights, inst.full_mask())) {
    rule.commit(inst, *state, *j, weights[*j]);
  }
  return state->selected();
}

ElementMask run_frugal_covering(const PoiInstance& inst,
                                const std::vector<double>& weights,
                                RuleName rule_name) {
  if (inst.direction() != Direction::kCovering) {
    throw MismatchError("run_frugal_covering needs a covering instance");
  }
  const FrugalRule& rule = frugal_rule(rule_name);
  check_rule(rule, inst);
  for (double w : weights) {
    if (w < 0) throw MismatchError("covering weights must be >= 0");
  }
  auto state = rule.make_state(inst);
  while (auto j = rule.next_selection(inst, *state, weights, inst.full_mask())) {
    rule.commit(inst, *state, *j, weights[*j]);
  }
  return state->selected();
}

double rule_marginal(const PoiInstance& inst, RuleName rule,
                     const RuleState& state, int elem, double y) {
  return frugal_rule(rule).marginal(inst, state, elem, y);
}

}  // namespace poi
