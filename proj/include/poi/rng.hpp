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

namespace poi {

// Counter-based generator: every draw is a pure function of
// (seed, trial, stream), so trials can be evaluated in any order or in
// parallel and still reproduce bit-identical results.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t trial, std::uint64_t stream) const {
    return mix(seed_ ^ 0x9e3779b97f4a7c15ULL, trial, stream);
  }

  // Uniform in [0, 1).
  double uniform01(std::uint64_t trial, std::uint64_t stream) const {
    return static_cast<double>(bits(trial, stream) >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return splitmix(splitmix(splitmix(a) ^ b) ^ c);
  }

  std::uint64_t seed_;
};

}  // namespace poi
