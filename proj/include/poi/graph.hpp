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
#include <numeric>
#include <string>
#include <vector>

namespace poi {

// Small undirected graph over named vertices. Vertices are stored sorted so
// indices are deterministic.
struct Graph {
  struct Edge {
    int u = -1;
    int v = -1;
    double cost = 0;
  };

  std::vector<std::string> vertices;  // sorted, unique
  std::vector<Edge> edges;

  int vertex_index(const std::string& name) const;
  int add_vertex(const std::string& name);  // keeps `vertices` sorted

  std::vector<int> degrees(const std::vector<bool>& present) const;
  bool connected() const;
};

struct Dsu {
  std::vector<int> parent;

  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// True iff the edge subset (given as indices into g.edges) has no cycle.
bool edges_acyclic(const Graph& g, const std::vector<int>& edge_ids);

// True iff the edge subset connects every vertex of g.
bool edges_span(const Graph& g, const std::vector<int>& edge_ids);

// True iff the induced subgraph on `present` vertices has no cycle.
bool induced_acyclic(const Graph& g, const std::vector<bool>& present);

// All-pairs shortest path costs (edge costs as lengths).
std::vector<std::vector<double>> all_pairs_shortest(const Graph& g);

// Dreyfus-Wagner table: for every subset of `terminals` (a list of vertex
// indices), the minimum cost of a tree containing that subset plus `root`.
// Entry k of the result corresponds to the bitmask k over `terminals`.
std::vector<double> steiner_tree_table(const Graph& g, int root,
                                       const std::vector<int>& terminals);

}  // namespace poi
