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

#include "poi/instance.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "poi/errors.hpp"

namespace poi {

namespace {

constexpr double kKnapsackSlack = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<int> mask_to_list(ElementMask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1) {
    if (m & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

bool ConstraintSpec::is_independent(ElementMask s) const {
  if (direction_ != Direction::kPacking) {
    throw MismatchError("is_independent requires a packing constraint");
  }
  if (const auto* u = std::get_if<UniformMatroid>(&kind_)) {
    return std::popcount(s) <= u->rank;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&kind_)) {
    for (std::size_t k = 0; k < p->parts.size(); ++k) {
      int count = 0;
      for (int i : p->parts[k]) count += mask_has(s, i);
      if (count > p->caps[k]) return false;
    }
    return true;
  }
  if (const auto* g = std::get_if<GraphicMatroid>(&kind_)) {
    std::vector<int> ids;
    for (int i : mask_to_list(s)) ids.push_back(g->edge_of_element[i]);
    return edges_acyclic(g->graph, ids);
  }
  if (const auto* m = std::get_if<MatchingSystem>(&kind_)) {
    std::vector<bool> used(m->graph.vertices.size(), false);
    for (int i : mask_to_list(s)) {
      const auto& e = m->graph.edges[m->edge_of_element[i]];
      if (used[e.u] || used[e.v]) return false;
      used[e.u] = used[e.v] = true;
    }
    return true;
  }
  if (const auto* f = std::get_if<ExplicitFamily>(&kind_)) {
    return std::binary_search(f->sets.begin(), f->sets.end(), s);
  }
  if (const auto* k = std::get_if<KnapsackConstraint>(&kind_)) {
    double total = 0;
    for (int i : mask_to_list(s)) total += k->sizes[i];
    return total <= k->capacity + kKnapsackSlack;
  }
  if (const auto* d = std::get_if<Disjointness>(&kind_)) {
    std::vector<int> seen;
    for (int i : mask_to_list(s)) {
      for (int tok : d->groups[i]) {
        if (std::find(seen.begin(), seen.end(), tok) != seen.end()) {
          return false;
        }
        seen.push_back(tok);
      }
    }
    return true;
  }
  throw MismatchError("constraint kind " + kind_name() + " is not packing");
}

bool ConstraintSpec::is_feasible_cover(ElementMask s) const {
  if (direction_ != Direction::kCovering) {
    throw MismatchError("is_feasible_cover requires a covering constraint");
  }
  if (const auto* u = std::get_if<UniformMatroid>(&kind_)) {
    // Contains a basis iff at least `rank` elements.
    return std::popcount(s) >= u->rank;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&kind_)) {
    for (std::size_t k = 0; k < p->parts.size(); ++k) {
      int count = 0;
      for (int i : p->parts[k]) count += mask_has(s, i);
      if (count < p->caps[k]) return false;
    }
    return true;
  }
  if (const auto* f = std::get_if<ExplicitFamily>(&kind_)) {
    return std::binary_search(f->sets.begin(), f->sets.end(), s);
  }
  if (const auto* c = std::get_if<SetCoverFeasibility>(&kind_)) {
    std::vector<bool> covered(c->universe.size(), false);
    for (int i : mask_to_list(s)) {
      for (int u : c->covers[i]) covered[u] = true;
    }
    return std::all_of(covered.begin(), covered.end(),
                       [](bool b) { return b; });
  }
  if (const auto* sp = std::get_if<SpanningFeasibility>(&kind_)) {
    std::vector<int> ids;
    for (int i : mask_to_list(s)) ids.push_back(sp->edge_of_element[i]);
    return edges_span(sp->graph, ids);
  }
  if (const auto* f = std::get_if<FvsFeasibility>(&kind_)) {
    std::vector<bool> present(f->graph.vertices.size(), true);
    for (int i : mask_to_list(s)) present[f->vertex_of_element[i]] = false;
    return induced_acyclic(f->graph, present);
  }
  if (std::get_if<PcstFeasibility>(&kind_)) {
    return true;  // any penalized set is allowed; the tree term is in h
  }
  throw MismatchError("constraint kind " + kind_name() + " is not covering");
}

bool ConstraintSpec::is_matroid_kind() const {
  return std::holds_alternative<UniformMatroid>(kind_) ||
         std::holds_alternative<PartitionMatroid>(kind_) ||
         std::holds_alternative<GraphicMatroid>(kind_) ||
         std::holds_alternative<SpanningFeasibility>(kind_);
}

int ConstraintSpec::rank(ElementMask s) const {
  if (const auto* u = std::get_if<UniformMatroid>(&kind_)) {
    return std::min(std::popcount(s), u->rank);
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&kind_)) {
    int r = 0;
    for (std::size_t k = 0; k < p->parts.size(); ++k) {
      int count = 0;
      for (int i : p->parts[k]) count += mask_has(s, i);
      r += std::min(count, p->caps[k]);
    }
    return r;
  }
  const Graph* graph = nullptr;
  const std::vector<int>* edge_of = nullptr;
  if (const auto* g = std::get_if<GraphicMatroid>(&kind_)) {
    graph = &g->graph;
    edge_of = &g->edge_of_element;
  } else if (const auto* sp = std::get_if<SpanningFeasibility>(&kind_)) {
    graph = &sp->graph;
    edge_of = &sp->edge_of_element;
  }
  if (graph != nullptr) {
    Dsu dsu(static_cast<int>(graph->vertices.size()));
    int r = 0;
    for (int i : mask_to_list(s)) {
      const auto& e = graph->edges[(*edge_of)[i]];
      if (dsu.unite(e.u, e.v)) ++r;
    }
    return r;
  }
  throw MismatchError("rank oracle requires a matroid constraint kind");
}

std::string ConstraintSpec::kind_name() const {
  struct Visitor {
    std::string operator()(const UniformMatroid&) { return "uniform-matroid"; }
    std::string operator()(const PartitionMatroid&) {
      return "partition-matroid";
    }
    std::string operator()(const GraphicMatroid&) { return "graphic-matroid"; }
    std::string operator()(const MatchingSystem&) { return "matching"; }
    std::string operator()(const ExplicitFamily&) { return "explicit"; }
    std::string operator()(const KnapsackConstraint&) { return "knapsack"; }
    std::string operator()(const SetCoverFeasibility&) { return "set-cover"; }
    std::string operator()(const SpanningFeasibility&) { return "spanning"; }
    std::string operator()(const FvsFeasibility&) { return "fvs"; }
    std::string operator()(const PcstFeasibility&) { return "pcst"; }
    std::string operator()(const Disjointness&) { return "disjointness"; }
  };
  return std::visit(Visitor{}, kind_);
}

double SemiadditiveObjective::h(ElementMask selected) const {
  if (std::holds_alternative<AdditiveObjective>(kind_)) return 0;
  if (const auto* f = std::get_if<FacilityLocationObjective>(&kind_)) {
    if (selected == 0) return kInf;
    double total = 0;
    for (int c : f->clients) {
      double best = kInf;
      ElementMask m = selected;
      for (int i = 0; m; ++i, m >>= 1) {
        if (m & 1) best = std::min(best, f->dist[c][f->facility_point[i]]);
      }
      total += best;
    }
    return total;
  }
  const auto& p = std::get<PcstPenaltyObjective>(kind_);
  // Terminals are the non-root vertices whose element is NOT selected.
  std::size_t tmask = 0;
  std::size_t nonroot = 0;
  for (int v = 0; v < static_cast<int>(p.graph.vertices.size()); ++v) {
    if (v == p.root) continue;
    if (!mask_has(selected, p.element_of_vertex[v])) {
      tmask |= std::size_t{1} << nonroot;
    }
    ++nonroot;
  }
  return p.steiner_cost[tmask];
}

std::string SemiadditiveObjective::kind_name() const {
  if (std::holds_alternative<AdditiveObjective>(kind_)) return "additive";
  if (std::holds_alternative<FacilityLocationObjective>(kind_)) {
    return "facility-location";
  }
  return "pcst";
}

int SetProbeFamily::ell() const {
  int m = 1;
  for (const auto& s : sets) m = std::max(m, static_cast<int>(s.members.size()));
  return m;
}

PoiInstance::PoiInstance(std::vector<ProbeElement> elements,
                         Direction direction, ConstraintSpec constraint,
                         SemiadditiveObjective objective,
                         std::optional<ConstraintSpec> probing_constraint,
                         std::optional<SetProbeFamily> set_probing)
    : elements_(std::move(elements)),
      direction_(direction),
      constraint_(std::move(constraint)),
      objective_(std::move(objective)),
      probing_constraint_(std::move(probing_constraint)),
      set_probing_(std::move(set_probing)) {
  if (elements_.empty()) {
    throw ParseError("instance needs at least one element");
  }
  if (elements_.size() > 64) {
    throw ParseError("instances are capped at 64 elements");
  }
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1].id >= elements_[i].id) {
      throw ParseError("element ids must be unique (sorted order broken)");
    }
  }
  tau_max_.reserve(elements_.size());
  tau_min_.reserve(elements_.size());
  for (const auto& e : elements_) {
    if (e.price < 0) throw ParseError("element " + e.id + ": price must be >= 0");
    if (e.dist.min_value() < 0) {
      throw ParseError("element " + e.id + ": support values must be >= 0");
    }
    if (e.fallback &&
        !(e.dist.is_deterministic() && e.dist.min_value() == 0)) {
      throw ParseError("fallback element " + e.id +
                       " must have the deterministic zero distribution");
    }
    tau_max_.push_back(grade_max(e.dist, e.price));
    tau_min_.push_back(grade_min(e.dist, e.price));
  }
  if (constraint_.direction() != direction_) {
    throw ParseError("constraint direction disagrees with the instance");
  }
  if (direction_ == Direction::kCovering &&
      !constraint_.is_feasible_cover(full_mask())) {
    throw ParseError("covering instance is infeasible: the full element set "
                     "is not a feasible cover");
  }
  if (direction_ == Direction::kPacking && !constraint_.is_independent(0)) {
    throw ParseError("packing family must contain the empty set");
  }
  if (probing_constraint_ &&
      probing_constraint_->direction() != Direction::kPacking) {
    throw ParseError("probing constraint must be a packing family");
  }
}

int PoiInstance::index_of(const std::string& id) const {
  auto it = std::lower_bound(
      elements_.begin(), elements_.end(), id,
      [](const ProbeElement& e, const std::string& s) { return e.id < s; });
  if (it == elements_.end() || it->id != id) {
    throw LookupError("unknown element id: " + id);
  }
  return static_cast<int>(it - elements_.begin());
}

std::vector<std::string> PoiInstance::ids_of(ElementMask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (mask_has(m, i)) out.push_back(elements_[i].id);
  }
  return out;
}

double eval_objective(const PoiInstance& inst, ElementMask selected,
                      const std::vector<double>& values) {
  double total = inst.objective().h(selected);
  ElementMask m = selected;
  for (int i = 0; m; ++i, m >>= 1) {
    if (m & 1) total += values[i];
  }
  return total;
}

double eval_objective(const PoiInstance& inst,
                      const std::vector<std::string>& selected,
                      const std::map<std::string, double>& realized) {
  ElementMask mask = 0;
  std::vector<double> values(inst.size(), 0);
  for (const auto& id : selected) {
    int i = inst.index_of(id);
    auto it = realized.find(id);
    if (it == realized.end()) {
      throw LookupError("no realized value for selected element " + id);
    }
    mask |= element_bit(i);
    values[i] = it->second;
  }
  return eval_objective(inst, mask, values);
}

}  // namespace poi
