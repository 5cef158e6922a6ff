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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "poi/graph.hpp"

namespace poi {

// One full moat-growing run. Active components discharge their pooled
// penalty while growing moats; tight edges merge components, exhausted
// components deactivate and label their members. Labeled vertices are
// committed to the penalized set immediately.
struct GwRun {
  std::vector<int> labeling_order;   // vertex indices, in event order
  std::vector<double> label_times;
  std::vector<int> label_event;      // death event id per label
  std::vector<bool> labeled;         // per vertex
  std::vector<int> tree_edges;       // pruned tree (indices into graph.edges)
};

// `penalties` is indexed by vertex; the root entry is ignored.
GwRun pcst_gw_run(const Graph& graph, int root,
                  const std::vector<double>& penalties);

struct PcstResult {
  std::vector<std::pair<std::string, std::string>> tree_edges;
  std::vector<std::string> penalized;
};

// Modified Goemans-Williamson: same tree as GW, but every vertex that is
// ever labeled pays its penalty. Throws on a disconnected graph.
PcstResult pcst_modified_gw(const Graph& graph, const std::string& root,
                            const std::map<std::string, double>& penalties);

}  // namespace poi
