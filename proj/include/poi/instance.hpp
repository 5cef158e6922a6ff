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
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poi/distribution.hpp"
#include "poi/graph.hpp"

namespace poi {

// Element subsets as bitmasks; instances are capped at 64 elements.
using ElementMask = std::uint64_t;

inline ElementMask element_bit(int i) { return ElementMask{1} << i; }
inline bool mask_has(ElementMask m, int i) { return (m >> i) & 1; }

enum class Direction { kPacking, kCovering };

// One random parameter: its distribution and the price of revealing it.
struct ProbeElement {
  std::string id;
  DiscreteDistribution dist;
  double price = 0;
  bool fallback = false;
};

// ---------------------------------------------------------------------------
// Constraint kinds. Packing kinds are downward-closed families, covering
// kinds upward-closed. Element references are indices into the instance's
// sorted element list.

struct UniformMatroid {
  int rank = 0;
};

struct PartitionMatroid {
  std::vector<std::vector<int>> parts;  // disjoint, covering all elements
  std::vector<int> caps;
};

// Elements are edges of `graph`; edge_of_element[i] indexes graph.edges.
struct GraphicMatroid {
  Graph graph;
  std::vector<int> edge_of_element;
};

struct MatchingSystem {
  Graph graph;
  std::vector<int> edge_of_element;
};

struct ExplicitFamily {
  std::vector<ElementMask> sets;  // sorted; closed under the direction
};

struct KnapsackConstraint {
  std::vector<double> sizes;  // per element, > 0
  double capacity = 0;
};

struct SetCoverFeasibility {
  std::vector<std::string> universe;
  std::vector<std::vector<int>> covers;  // element -> universe indices
};

struct SpanningFeasibility {
  Graph graph;
  std::vector<int> edge_of_element;
};

struct FvsFeasibility {
  Graph graph;
  std::vector<int> vertex_of_element;
};

struct PcstFeasibility {
  Graph graph;
  int root = -1;
  std::vector<int> vertex_of_element;
};

struct Disjointness {
  std::vector<std::vector<int>> groups;  // element -> member tokens
};

class ConstraintSpec {
 public:
  using Kind =
      std::variant<UniformMatroid, PartitionMatroid, GraphicMatroid,
                   MatchingSystem, ExplicitFamily, KnapsackConstraint,
                   SetCoverFeasibility, SpanningFeasibility, FvsFeasibility,
                   PcstFeasibility, Disjointness>;

  ConstraintSpec() = default;
  ConstraintSpec(Direction direction, Kind kind)
      : direction_(direction), kind_(std::move(kind)) {}

  Direction direction() const { return direction_; }
  const Kind& kind() const { return kind_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&kind_);
  }

  // Membership in the downward-closed family. Requires packing direction.
  bool is_independent(ElementMask s) const;

  // Membership in the upward-closed family. Requires covering direction.
  bool is_feasible_cover(ElementMask s) const;

  // Matroid rank of s; only for matroid kinds (uniform, partition, graphic/
  // spanning, explicit treated by enumeration).
  int rank(ElementMask s) const;
  bool is_matroid_kind() const;

  std::string kind_name() const;

 private:
  Direction direction_ = Direction::kPacking;
  Kind kind_;
};

// ---------------------------------------------------------------------------
// Objectives: an additive term over selected elements plus a set function h
// that never looks at realized values.

struct AdditiveObjective {};

struct FacilityLocationObjective {
  std::vector<std::string> points;        // metric point names, sorted
  std::vector<std::vector<double>> dist;  // symmetric, triangle inequality
  std::vector<int> clients;               // point indices
  std::vector<int> facility_point;        // element -> point index
};

struct PcstPenaltyObjective {
  Graph graph;
  int root = -1;
  std::vector<int> vertex_of_element;  // element -> vertex
  std::vector<int> element_of_vertex;  // vertex -> element (-1 for root)
  std::vector<double> steiner_cost;    // by mask over non-root vertices
};

class SemiadditiveObjective {
 public:
  using Kind = std::variant<AdditiveObjective, FacilityLocationObjective,
                            PcstPenaltyObjective>;

  SemiadditiveObjective() = default;
  explicit SemiadditiveObjective(Kind kind) : kind_(std::move(kind)) {}

  const Kind& kind() const { return kind_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&kind_);
  }

  // The h term. May be +inf (facility location of an empty set).
  double h(ElementMask selected) const;

  std::string kind_name() const;

 private:
  Kind kind_;
};

// ---------------------------------------------------------------------------

struct ProbeSet {
  std::string id;
  std::vector<int> members;  // element indices
  double price = 0;
};

struct SetProbeFamily {
  std::vector<ProbeSet> sets;

  int ell() const;  // size of the largest set
};

class PoiInstance {
 public:
  PoiInstance(std::vector<ProbeElement> elements, Direction direction,
              ConstraintSpec constraint, SemiadditiveObjective objective,
              std::optional<ConstraintSpec> probing_constraint = std::nullopt,
              std::optional<SetProbeFamily> set_probing = std::nullopt);

  const std::vector<ProbeElement>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  Direction direction() const { return direction_; }
  const ConstraintSpec& constraint() const { return constraint_; }
  const SemiadditiveObjective& objective() const { return objective_; }
  const std::optional<ConstraintSpec>& probing_constraint() const {
    return probing_constraint_;
  }
  const std::optional<SetProbeFamily>& set_probing() const {
    return set_probing_;
  }

  int index_of(const std::string& id) const;  // throws LookupError

  // Grades and surrogate means, precomputed per element.
  double grade(int i) const {
    return direction_ == Direction::kPacking ? tau_max_[i] : tau_min_[i];
  }
  double tau_max(int i) const { return tau_max_[i]; }
  double tau_min(int i) const { return tau_min_[i]; }

  // Realized surrogate of element i given realized value x.
  double surrogate_value(int i, double x) const {
    return direction_ == Direction::kPacking ? std::min(x, tau_max_[i])
                                             : std::max(x, tau_min_[i]);
  }

  ElementMask full_mask() const {
    return size() == 64 ? ~ElementMask{0} : (element_bit(size()) - 1);
  }

  std::vector<std::string> ids_of(ElementMask m) const;

 private:
  std::vector<ProbeElement> elements_;  // sorted by id
  Direction direction_;
  ConstraintSpec constraint_;
  SemiadditiveObjective objective_;
  std::optional<ConstraintSpec> probing_constraint_;
  std::optional<SetProbeFamily> set_probing_;
  std::vector<double> tau_max_;
  std::vector<double> tau_min_;
};

// Additive part plus h. `values` must hold a value for every element in
// `selected` (full vectors are fine).
double eval_objective(const PoiInstance& inst, ElementMask selected,
                      const std::vector<double>& values);

// Spec-facing variant keyed by element id; throws LookupError when a selected
// element has no realized value.
double eval_objective(const PoiInstance& inst,
                      const std::vector<std::string>& selected,
                      const std::map<std::string, double>& realized);

}  // namespace poi
