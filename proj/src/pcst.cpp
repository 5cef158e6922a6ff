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

#include "poi/pcst.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "poi/errors.hpp"
#include "poi/frugal.hpp"
#include "poi/instance.hpp"

namespace poi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Simultaneous events are processed in lexicographic order.
constexpr double kEventTol = 1e-9;

struct MoatSim {
  const Graph& g;
  int root;

  Dsu dsu;
  std::vector<bool> active;    // per representative
  std::vector<double> charge;  // per representative, remaining penalty pool
  std::vector<double> load;    // per edge, accumulated dual
  GwRun run;
  double now = 0;
  int next_event = 0;

  MoatSim(const Graph& graph, int r, const std::vector<double>& penalties)
      : g(graph), root(r), dsu(static_cast<int>(graph.vertices.size())) {
    int n = static_cast<int>(g.vertices.size());
    active.assign(n, true);
    charge.assign(n, 0);
    load.assign(g.edges.size(), 0);
    run.labeled.assign(n, false);
    for (int v = 0; v < n; ++v) charge[v] = v == root ? 0 : penalties[v];
    active[root] = false;
  }

  int edge_rate(int e) {
    int cu = dsu.find(g.edges[e].u);
    int cv = dsu.find(g.edges[e].v);
    if (cu == cv) return 0;
    return (active[cu] ? 1 : 0) + (active[cv] ? 1 : 0);
  }

  // Lexicographically smallest member name, the tie key for death events.
  std::string comp_key(int rep) {
    std::string best;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      if (dsu.find(v) == rep && (best.empty() || g.vertices[v] < best)) {
        best = g.vertices[v];
      }
    }
    return best;
  }

  std::string edge_key(int e) {
    const auto& a = g.vertices[g.edges[e].u];
    const auto& b = g.vertices[g.edges[e].v];
    return a < b ? a + "\x1f" + b : b + "\x1f" + a;
  }

  void label_component(int rep) {
    std::vector<int> members;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
      if (dsu.find(v) == rep && !run.labeled[v]) members.push_back(v);
    }
    std::sort(members.begin(), members.end(), [&](int a, int b) {
      return g.vertices[a] < g.vertices[b];
    });
    for (int v : members) {
      run.labeled[v] = true;
      run.labeling_order.push_back(v);
      run.label_times.push_back(now);
      run.label_event.push_back(next_event);
    }
    ++next_event;
  }

  void step_all() {
    int n = static_cast<int>(g.vertices.size());
    for (;;) {
      // Candidate events: component deaths and edge tightenings.
      double tmin = kInf;
      for (int v = 0; v < n; ++v) {
        if (dsu.find(v) == v && active[v]) tmin = std::min(tmin, charge[v]);
      }
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int rate = edge_rate(e);
        if (rate > 0) tmin = std::min(tmin, (g.edges[e].cost - load[e]) / rate);
      }
      if (tmin == kInf) break;  // no active components left
      // Near-simultaneous events resolve by lexicographic key.
      double best_t = kInf;
      bool best_is_edge = false;
      int best_id = -1;
      std::string best_key;
      auto consider = [&](double t, bool is_edge, int id,
                          const std::string& key) {
        if (best_id < 0 || key < best_key) {
          best_t = t;
          best_is_edge = is_edge;
          best_id = id;
          best_key = key;
        }
      };
      for (int v = 0; v < n; ++v) {
        if (dsu.find(v) == v && active[v] && charge[v] <= tmin + kEventTol) {
          consider(charge[v], false, v, comp_key(v));
        }
      }
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        int rate = edge_rate(e);
        if (rate == 0) continue;
        double t = (g.edges[e].cost - load[e]) / rate;
        if (t <= tmin + kEventTol) consider(t, true, e, edge_key(e));
      }
      double dt = std::max(best_t, 0.0);
      for (int v = 0; v < n; ++v) {
        if (dsu.find(v) == v && active[v]) charge[v] -= dt;
      }
      for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        load[e] += edge_rate(e) * dt;
      }
      now += dt;
      if (best_is_edge) {
        int e = best_id;
        int cu = dsu.find(g.edges[e].u);
        int cv = dsu.find(g.edges[e].v);
        run.tree_edges.push_back(e);
        dsu.unite(cu, cv);
        int m = dsu.find(cu);
        double pooled = charge[cu] + charge[cv];
        bool has_root = dsu.find(root) == m;
        charge[m] = has_root ? 0 : pooled;
        active[m] = !has_root;
      } else {
        int v = best_id;
        active[v] = false;
        charge[v] = 0;
        label_component(v);
      }
    }
    prune();
  }

  // Keep only edges needed to connect never-labeled vertices to the root.
  void prune() {
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (vertex, edge)
    for (int e : run.tree_edges) {
      adj[g.edges[e].u].push_back({g.edges[e].v, e});
      adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
    std::vector<bool> keep_vertex(n, false);
    std::vector<int> stack{root};
    keep_vertex[root] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : adj[v]) {
        if (!keep_vertex[u]) {
          keep_vertex[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::vector<int> degree(n, 0);
    std::vector<bool> edge_kept(g.edges.size(), false);
    for (int e : run.tree_edges) {
      if (keep_vertex[g.edges[e].u] && keep_vertex[g.edges[e].v]) {
        edge_kept[e] = true;
        ++degree[g.edges[e].u];
        ++degree[g.edges[e].v];
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (v == root || !keep_vertex[v] || degree[v] != 1 ||
            !run.labeled[v]) {
          continue;
        }
        for (auto [u, e] : adj[v]) {
          if (edge_kept[e]) {
            edge_kept[e] = false;
            --degree[v];
            --degree[u];
            changed = true;
            break;
          }
        }
        keep_vertex[v] = false;
      }
    }
    std::vector<int> pruned;
    for (int e : run.tree_edges) {
      if (edge_kept[e]) pruned.push_back(e);
    }
    run.tree_edges = std::move(pruned);
  }
};

}  // namespace

GwRun pcst_gw_run(const Graph& graph, int root,
                  const std::vector<double>& penalties) {
  MoatSim sim(graph, root, penalties);
  sim.step_all();
  return std::move(sim.run);
}

PcstResult pcst_modified_gw(const Graph& graph, const std::string& root,
                            const std::map<std::string, double>& penalties) {
  int r = graph.vertex_index(root);
  if (r < 0) throw std::invalid_argument("root is not a vertex: " + root);
  if (!graph.connected()) {
    throw std::invalid_argument("pcst requires a connected graph");
  }
  std::vector<double> pen(graph.vertices.size(), 0);
  for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v) {
    if (v == r) continue;
    auto it = penalties.find(graph.vertices[v]);
    if (it == penalties.end()) {
      throw std::invalid_argument("missing penalty for vertex " +
                                  graph.vertices[v]);
    }
    if (it->second < 0) throw std::invalid_argument("penalties must be >= 0");
    pen[v] = it->second;
  }
  GwRun run = pcst_gw_run(graph, r, pen);
  PcstResult result;
  for (int v : run.labeling_order) {
    result.penalized.push_back(graph.vertices[v]);
  }
  for (int e : run.tree_edges) {
    const auto& a = graph.vertices[graph.edges[e].u];
    const auto& b = graph.vertices[graph.edges[e].v];
    result.tree_edges.push_back(a < b ? std::make_pair(a, b)
                                      : std::make_pair(b, a));
  }
  std::sort(result.tree_edges.begin(), result.tree_edges.end());
  return result;
}

// ---------------------------------------------------------------------------
// The Frugal rule. Selections follow the labeling order of the moat run on
// the assumed weights. A death time depends on the pooled weights of the
// dying component, so a member may be selected only once every member of
// that event is known; unknown members are surfaced first, which makes the
// adaptive runner probe them. Raising one weight only postpones that
// component's death, so events before it (and the committed prefix) stand.

namespace {

class PcstState : public RuleState {
 public:
  std::vector<double> last_weights;  // snapshot for pointwise marginals
};

class PcstModifiedGwRule : public FrugalRule {
 public:
  RuleName name() const override { return RuleName::kPcstModifiedGw; }

  bool supports(const PoiInstance& inst) const override {
    return inst.direction() == Direction::kCovering &&
           inst.constraint().get_if<PcstFeasibility>() != nullptr &&
           inst.objective().get_if<PcstPenaltyObjective>() != nullptr;
  }

  std::unique_ptr<RuleState> make_state(const PoiInstance& inst) const override {
    auto st = std::make_unique<PcstState>();
    for (int i = 0; i < inst.size(); ++i) {
      st->last_weights.push_back(inst.tau_min(i));
    }
    return st;
  }

  double marginal(const PoiInstance& inst, const RuleState& state, int elem,
                  double y) const override {
    const auto& st = static_cast<const PcstState&>(state);
    std::vector<double> w = st.last_weights;
    w[elem] = y;
    GwRun run = simulate(inst, w);
    const auto* p = inst.objective().get_if<PcstPenaltyObjective>();
    int v = p->vertex_of_element[elem];
    if (!run.labeled[v]) return 0;
    for (std::size_t k = 0; k < run.labeling_order.size(); ++k) {
      if (run.labeling_order[k] == v) {
        return 1.0 / (1.0 + run.label_times[k]);
      }
    }
    return 0;
  }

  std::optional<int> next_selection(const PoiInstance& inst, RuleState& state,
                                    const std::vector<double>& weights,
                                    ElementMask known) const override {
    auto& st = static_cast<PcstState&>(state);
    st.last_weights = weights;
    GwRun run = simulate(inst, weights);
    const auto* p = inst.objective().get_if<PcstPenaltyObjective>();
    for (std::size_t k = 0; k < run.labeling_order.size(); ++k) {
      int elem = p->element_of_vertex[run.labeling_order[k]];
      if (mask_has(st.selected(), elem)) continue;
      // First unconfirmed label. Its event is only final once every member
      // of the dying component has a known weight.
      int event = run.label_event[k];
      for (std::size_t m = 0; m < run.labeling_order.size(); ++m) {
        if (run.label_event[m] != event) continue;
        int other = p->element_of_vertex[run.labeling_order[m]];
        if (!mask_has(known, other) && !mask_has(st.selected(), other)) {
          return other;
        }
      }
      return elem;
    }
    return std::nullopt;
  }

 protected:
  void on_commit(const PoiInstance&, RuleState&, int, double) const override {}

 private:
  static GwRun simulate(const PoiInstance& inst,
                        const std::vector<double>& weights) {
    const auto* p = inst.objective().get_if<PcstPenaltyObjective>();
    std::vector<double> pen(p->graph.vertices.size(), 0);
    for (int i = 0; i < inst.size(); ++i) {
      pen[p->vertex_of_element[i]] = weights[i];
    }
    return pcst_gw_run(p->graph, p->root, pen);
  }
};

}  // namespace

const FrugalRule& pcst_rule() {
  static const PcstModifiedGwRule rule;
  return rule;
}

}  // namespace poi
