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

#include "poi/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace poi {

namespace {

constexpr double kProbSumTol = 1e-12;
// Atoms closer than this are merged into one (canonical form).
constexpr double kAtomMergeTol = 1e-12;

// Merges near-coincident atoms and drops zero-mass ones, then normalizes a
// tiny residual so long products of CDFs stay within the constructor
// tolerance.
DiscreteDistribution canonicalize(std::vector<std::pair<double, double>> atoms) {
  std::vector<double> support;
  std::vector<double> probs;
  for (const auto& [v, p] : atoms) {
    if (p <= 0) continue;
    if (!support.empty() && v - support.back() <= kAtomMergeTol) {
      probs.back() += p;
    } else {
      support.push_back(v);
      probs.push_back(p);
    }
  }
  double total = 0;
  for (double p : probs) total += p;
  for (double& p : probs) p /= total;
  return DiscreteDistribution(std::move(support), std::move(probs));
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> support,
                                           std::vector<double> probs)
    : support_(std::move(support)), probs_(std::move(probs)) {
  if (support_.empty()) {
    throw std::invalid_argument("distribution support must be nonempty");
  }
  if (support_.size() != probs_.size()) {
    throw std::invalid_argument("support and probs must have equal length");
  }
  double sum = 0;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if (!std::isfinite(support_[j])) {
      throw std::invalid_argument("support values must be finite");
    }
    if (j > 0 && support_[j] <= support_[j - 1]) {
      throw std::invalid_argument("support must be strictly increasing");
    }
    if (!(probs_[j] > 0)) {
      throw std::invalid_argument("probabilities must be positive");
    }
    sum += probs_[j];
  }
  if (std::abs(sum - 1.0) > kProbSumTol) {
    throw std::invalid_argument("probabilities must sum to 1");
  }
}

DiscreteDistribution DiscreteDistribution::point_mass(double value) {
  return DiscreteDistribution({value}, {1.0});
}

double DiscreteDistribution::expected_value() const {
  double e = 0;
  for (std::size_t j = 0; j < support_.size(); ++j) e += probs_[j] * support_[j];
  return e;
}

double DiscreteDistribution::expected_excess(double tau) const {
  double e = 0;
  for (std::size_t j = support_.size(); j-- > 0;) {
    if (support_[j] <= tau) break;
    e += probs_[j] * (support_[j] - tau);
  }
  return e;
}

double DiscreteDistribution::expected_shortfall(double tau) const {
  double e = 0;
  for (std::size_t j = 0; j < support_.size(); ++j) {
    if (support_[j] >= tau) break;
    e += probs_[j] * (tau - support_[j]);
  }
  return e;
}

double DiscreteDistribution::cdf(double x) const {
  double c = 0;
  for (std::size_t j = 0; j < support_.size() && support_[j] <= x; ++j) {
    c += probs_[j];
  }
  return c;
}

std::size_t DiscreteDistribution::sample_index(double u) const {
  double cum = 0;
  for (std::size_t j = 0; j + 1 < probs_.size(); ++j) {
    cum += probs_[j];
    if (u < cum) return j;
  }
  return probs_.size() - 1;
}

double grade_max(const DiscreteDistribution& d, double price) {
  if (price < 0) throw std::invalid_argument("probing price must be >= 0");
  if (price == 0) return d.max_value();
  const auto& s = d.support();
  const auto& p = d.probs();
  // Walk knots right to left: f(s_j) = E[(X - s_j)^+]. On the segment
  // [s_j, s_{j+1}] the slope is -P[X > s_j].
  double tail = 0;   // P[X >= s_{j+1}]
  double fhigh = 0;  // f at s_{j+1}
  for (std::size_t j = s.size() - 1; j-- > 0;) {
    tail += p[j + 1];
    double flow = fhigh + tail * (s[j + 1] - s[j]);
    if (flow >= price) {
      return s[j + 1] - (price - fhigh) / tail;
    }
    fhigh = flow;
  }
  // Below min support the slope is -1: f(tau) = E[X] - tau.
  return d.expected_value() - price;
}

double grade_min(const DiscreteDistribution& d, double price) {
  if (price < 0) throw std::invalid_argument("probing price must be >= 0");
  if (price == 0) return d.min_value();
  const auto& s = d.support();
  const auto& p = d.probs();
  double cum = p[0];  // P[X <= s_j]
  double flow = 0;    // f at s_j
  for (std::size_t j = 0; j + 1 < s.size(); ++j) {
    double fhigh = flow + cum * (s[j + 1] - s[j]);
    if (fhigh >= price) {
      return s[j] + (price - flow) / cum;
    }
    flow = fhigh;
    cum += p[j + 1];
  }
  // Above max support the slope is 1: f(tau) = tau - E[X].
  return d.expected_value() + price;
}

SurrogateDistribution surrogate_max(const DiscreteDistribution& d,
                                    double price) {
  double tau = grade_max(d, price);
  std::vector<std::pair<double, double>> atoms;
  for (std::size_t j = 0; j < d.size(); ++j) {
    atoms.emplace_back(std::min(d.support()[j], tau), d.probs()[j]);
  }
  return {canonicalize(std::move(atoms)), SurrogateKind::kMaxSide, tau};
}

SurrogateDistribution surrogate_min(const DiscreteDistribution& d,
                                    double price) {
  double tau = grade_min(d, price);
  std::vector<std::pair<double, double>> atoms;
  for (std::size_t j = 0; j < d.size(); ++j) {
    atoms.emplace_back(std::max(d.support()[j], tau), d.probs()[j]);
  }
  return {canonicalize(std::move(atoms)), SurrogateKind::kMinSide, tau};
}

DiscreteDistribution compose_max(const std::vector<DiscreteDistribution>& ds) {
  if (ds.empty()) {
    throw std::invalid_argument("compose_max needs at least one distribution");
  }
  if (ds.size() == 1) return ds[0];
  std::vector<double> values;
  for (const auto& d : ds) {
    values.insert(values.end(), d.support().begin(), d.support().end());
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  // P[max <= v] is the product of the component CDFs; atom masses are the
  // increments of that product along the union support.
  std::vector<std::pair<double, double>> atoms;
  double prev = 0;
  for (double v : values) {
    double f = 1;
    for (const auto& d : ds) f *= d.cdf(v);
    atoms.emplace_back(v, f - prev);
    prev = f;
  }
  return canonicalize(std::move(atoms));
}

}  // namespace poi
