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

#include "poi/graph.hpp"

#include <algorithm>
#include <limits>

namespace poi {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int Graph::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  if (it == vertices.end() || *it != name) return -1;
  return static_cast<int>(it - vertices.begin());
}

int Graph::add_vertex(const std::string& name) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  if (it != vertices.end() && *it == name) {
    return static_cast<int>(it - vertices.begin());
  }
  int pos = static_cast<int>(it - vertices.begin());
  vertices.insert(it, name);
  for (auto& e : edges) {
    if (e.u >= pos) ++e.u;
    if (e.v >= pos) ++e.v;
  }
  return pos;
}

std::vector<int> Graph::degrees(const std::vector<bool>& present) const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& e : edges) {
    if (present[e.u] && present[e.v]) {
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return deg;
}

bool Graph::connected() const {
  if (vertices.empty()) return true;
  Dsu dsu(static_cast<int>(vertices.size()));
  int comps = static_cast<int>(vertices.size());
  for (const auto& e : edges) {
    if (dsu.unite(e.u, e.v)) --comps;
  }
  return comps == 1;
}

bool edges_acyclic(const Graph& g, const std::vector<int>& edge_ids) {
  Dsu dsu(static_cast<int>(g.vertices.size()));
  for (int id : edge_ids) {
    if (!dsu.unite(g.edges[id].u, g.edges[id].v)) return false;
  }
  return true;
}

bool edges_span(const Graph& g, const std::vector<int>& edge_ids) {
  if (g.vertices.empty()) return true;
  Dsu dsu(static_cast<int>(g.vertices.size()));
  int comps = static_cast<int>(g.vertices.size());
  for (int id : edge_ids) {
    if (dsu.unite(g.edges[id].u, g.edges[id].v)) --comps;
  }
  return comps == 1;
}

bool induced_acyclic(const Graph& g, const std::vector<bool>& present) {
  Dsu dsu(static_cast<int>(g.vertices.size()));
  for (const auto& e : g.edges) {
    if (present[e.u] && present[e.v] && !dsu.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<std::vector<double>> all_pairs_shortest(const Graph& g) {
  std::size_t n = g.vertices.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges) {
    d[e.u][e.v] = std::min(d[e.u][e.v], e.cost);
    d[e.v][e.u] = std::min(d[e.v][e.u], e.cost);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  }
  return d;
}

std::vector<double> steiner_tree_table(const Graph& g, int root,
                                       const std::vector<int>& terminals) {
  int n = static_cast<int>(g.vertices.size());
  int t = static_cast<int>(terminals.size());
  auto sp = all_pairs_shortest(g);
  std::size_t masks = std::size_t{1} << t;
  // dp[mask][v]: cheapest tree containing terminal set `mask` and vertex v.
  std::vector<std::vector<double>> dp(masks, std::vector<double>(n, kInf));
  for (int v = 0; v < n; ++v) dp[0][v] = 0;
  for (int j = 0; j < t; ++j) {
    for (int v = 0; v < n; ++v) {
      dp[std::size_t{1} << j][v] = sp[terminals[j]][v];
    }
  }
  for (std::size_t mask = 1; mask < masks; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons done above
    auto& row = dp[mask];
    for (std::size_t sub = (mask - 1) & mask; sub > 0;
         sub = (sub - 1) & mask) {
      if (sub < (mask ^ sub)) break;  // each split once
      const auto& a = dp[sub];
      const auto& b = dp[mask ^ sub];
      for (int v = 0; v < n; ++v) {
        row[v] = std::min(row[v], a[v] + b[v]);
      }
    }
    // Relax through shortest paths.
    for (int v = 0; v < n; ++v) {
      double best = row[v];
      for (int u = 0; u < n; ++u) {
        best = std::min(best, dp[mask][u] + sp[u][v]);
      }
      row[v] = best;
    }
  }
  std::vector<double> out(masks);
  for (std::size_t mask = 0; mask < masks; ++mask) out[mask] = dp[mask][root];
  return out;
}

}  // namespace poi
