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

#include <cstddef>
#include <vector>

namespace poi {

// Finite-support distribution. Support is strictly increasing, every mass is
// positive and the masses sum to 1 within 1e-12. Support values may be
// negative: surrogate distributions of elements with a negative grade need
// that; nonnegativity of problem inputs is enforced where elements are built.
class DiscreteDistribution {
 public:
  DiscreteDistribution(std::vector<double> support, std::vector<double> probs);

  static DiscreteDistribution point_mass(double value);

  const std::vector<double>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }
  double min_value() const { return support_.front(); }
  double max_value() const { return support_.back(); }
  bool is_deterministic() const { return support_.size() == 1; }

  double expected_value() const;
  // E[(X - tau)^+]; nonincreasing, convex, piecewise linear in tau.
  double expected_excess(double tau) const;
  // E[(tau - X)^+].
  double expected_shortfall(double tau) const;
  // P[X <= x].
  double cdf(double x) const;

  // Support index for a uniform draw u in [0, 1).
  std::size_t sample_index(double u) const;

  bool operator==(const DiscreteDistribution& other) const = default;

 private:
  std::vector<double> support_;
  std::vector<double> probs_;
};

// Grade on the max side: the tau solving E[(X - tau)^+] = price. For
// price = 0 the solution set is [max support, inf); returns max support.
// The result may be negative. Rejects negative prices.
double grade_max(const DiscreteDistribution& d, double price);

// Grade on the min side: the tau solving E[(tau - X)^+] = price. For
// price = 0 returns min support. Always >= min support.
double grade_min(const DiscreteDistribution& d, double price);

enum class SurrogateKind { kMaxSide, kMinSide };

// Distribution of min(X, tau_max) or max(X, tau_min), with the clipped or
// lifted atoms merged.
struct SurrogateDistribution {
  DiscreteDistribution dist;
  SurrogateKind kind;
  double grade;
};

SurrogateDistribution surrogate_max(const DiscreteDistribution& d,
                                    double price);
SurrogateDistribution surrogate_min(const DiscreteDistribution& d,
                                    double price);

// Exact distribution of the max of independent draws, one per input.
DiscreteDistribution compose_max(const std::vector<DiscreteDistribution>& ds);

}  // namespace poi
