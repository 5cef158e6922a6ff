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

#include "poi/instance_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "poi/errors.hpp"

namespace poi {

namespace {

using nlohmann::json;

constexpr double kMetricSymTol = 1e-12;
constexpr double kTriangleSlack = 1e-9;
constexpr int kMaxPcstVertices = 10;  // non-root, bounds the Steiner table

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const std::string& where,
                  const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

// Maps element ids to indices in the sorted element list.
struct IdIndex {
  std::map<std::string, int> index;

  int at(const std::string& id, const std::string& where) const {
    auto it = index.find(id);
    if (it == index.end()) fail(where, "unknown element id '" + id + "'");
    return it->second;
  }
};

// Edge-element graph: {"edges": {"<elem>": ["u", "v"]}, "vertices": [...]}.
std::pair<Graph, std::vector<int>> parse_edge_element_graph(
    const json& j, const std::string& where, const IdIndex& ids, int n) {
  Graph g;
  const json& edges = field(j, where, "edges");
  if (!edges.is_object()) fail(where, "'edges' must map element ids to pairs");
  if (auto it = j.find("vertices"); it != j.end()) {
    for (const auto& v : *it) g.add_vertex(str(v, where + ".vertices"));
  }
  for (const auto& [id, pair] : edges.items()) {
    if (!pair.is_array() || pair.size() != 2) {
      fail(where, "edge '" + id + "' must be a [u, v] pair");
    }
    g.add_vertex(str(pair[0], where));
    g.add_vertex(str(pair[1], where));
  }
  std::vector<int> edge_of_element(n, -1);
  std::vector<bool> seen(n, false);
  for (const auto& [id, pair] : edges.items()) {
    int e = ids.at(id, where);
    if (seen[e]) fail(where, "duplicate edge for element '" + id + "'");
    seen[e] = true;
    int u = g.vertex_index(str(pair[0], where));
    int v = g.vertex_index(str(pair[1], where));
    if (u == v) fail(where, "self-loop on element '" + id + "'");
    edge_of_element[e] = static_cast<int>(g.edges.size());
    g.edges.push_back({u, v, 0});
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    fail(where, "every element must be an edge of the graph");
  }
  return {std::move(g), std::move(edge_of_element)};
}

ConstraintSpec parse_constraint(const json& j, Direction direction,
                                const std::string& where, const IdIndex& ids,
                                int n, const SemiadditiveObjective* objective);

// Closure audit for explicit families: removing (packing) or adding
// (covering) one element must stay in the family. Sufficient by induction.
void check_explicit_closure(const std::vector<ElementMask>& sets,
                            Direction direction, int n,
                            const std::string& where) {
  for (ElementMask s : sets) {
    for (int i = 0; i < n; ++i) {
      ElementMask t;
      if (direction == Direction::kPacking) {
        if (!mask_has(s, i)) continue;
        t = s & ~element_bit(i);
      } else {
        if (mask_has(s, i)) continue;
        t = s | element_bit(i);
      }
      if (!std::binary_search(sets.begin(), sets.end(), t)) {
        fail(where, "explicit family is not closed under its direction");
      }
    }
  }
}

ConstraintSpec parse_constraint(const json& j, Direction direction,
                                const std::string& where, const IdIndex& ids,
                                int n, const SemiadditiveObjective* objective) {
  std::string kind = str(field(j, where, "kind"), where + ".kind");
  if (kind == "uniform-matroid") {
    int rank = static_cast<int>(number(field(j, where, "rank"), where));
    if (rank < 0 || rank > n) fail(where, "rank out of range");
    return {direction, UniformMatroid{rank}};
  }
  if (kind == "partition-matroid") {
    PartitionMatroid p;
    std::vector<bool> used(n, false);
    for (const auto& part : field(j, where, "parts")) {
      std::vector<int> members;
      for (const auto& id : field(part, where, "members")) {
        int e = ids.at(str(id, where), where);
        if (used[e]) fail(where, "element in two parts");
        used[e] = true;
        members.push_back(e);
      }
      int cap = static_cast<int>(number(field(part, where, "cap"), where));
      if (cap < 0) fail(where, "negative cap");
      if (direction == Direction::kCovering &&
          cap > static_cast<int>(members.size())) {
        fail(where, "cap exceeds part size");
      }
      p.parts.push_back(std::move(members));
      p.caps.push_back(cap);
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) {
      fail(where, "parts must cover every element");
    }
    return {direction, std::move(p)};
  }
  if (kind == "graphic-matroid" || kind == "spanning" || kind == "matching") {
    auto [g, edge_of] = parse_edge_element_graph(j, where, ids, n);
    if (kind == "matching") {
      if (direction != Direction::kPacking) {
        fail(where, "matching is a packing family");
      }
      return {direction, MatchingSystem{std::move(g), std::move(edge_of)}};
    }
    if (kind == "spanning") {
      if (direction != Direction::kCovering) {
        fail(where, "spanning feasibility is a covering family");
      }
      return {direction, SpanningFeasibility{std::move(g), std::move(edge_of)}};
    }
    if (direction != Direction::kPacking) {
      fail(where, "graphic matroid independence is a packing family");
    }
    return {direction, GraphicMatroid{std::move(g), std::move(edge_of)}};
  }
  if (kind == "explicit") {
    ExplicitFamily f;
    for (const auto& set : field(j, where, "sets")) {
      ElementMask m = 0;
      for (const auto& id : set) m |= element_bit(ids.at(str(id, where), where));
      f.sets.push_back(m);
    }
    std::sort(f.sets.begin(), f.sets.end());
    f.sets.erase(std::unique(f.sets.begin(), f.sets.end()), f.sets.end());
    check_explicit_closure(f.sets, direction, n, where);
    return {direction, std::move(f)};
  }
  if (kind == "knapsack") {
    if (direction != Direction::kPacking) {
      fail(where, "knapsack is a packing family");
    }
    KnapsackConstraint k;
    k.capacity = number(field(j, where, "capacity"), where);
    if (!(k.capacity > 0)) fail(where, "capacity must be > 0");
    k.sizes.assign(n, -1);
    const json& sizes = field(j, where, "sizes");
    for (const auto& [id, sz] : sizes.items()) {
      k.sizes[ids.at(id, where)] = number(sz, where);
    }
    for (int i = 0; i < n; ++i) {
      if (!(k.sizes[i] > 0)) fail(where, "every element needs a size > 0");
      if (k.sizes[i] > k.capacity + 1e-12) {
        fail(where, "item sizes must not exceed the capacity");
      }
    }
    return {direction, std::move(k)};
  }
  if (kind == "set-cover") {
    if (direction != Direction::kCovering) {
      fail(where, "set-cover feasibility is a covering family");
    }
    SetCoverFeasibility c;
    for (const auto& u : field(j, where, "universe")) {
      c.universe.push_back(str(u, where));
    }
    std::sort(c.universe.begin(), c.universe.end());
    if (std::adjacent_find(c.universe.begin(), c.universe.end()) !=
        c.universe.end()) {
      fail(where, "duplicate universe point");
    }
    if (c.universe.empty()) fail(where, "universe must be nonempty");
    c.covers.assign(n, {});
    std::vector<bool> present(n, false);
    for (const auto& [id, pts] : field(j, where, "covers").items()) {
      int e = ids.at(id, where);
      present[e] = true;
      for (const auto& p : pts) {
        auto name = str(p, where);
        auto it = std::lower_bound(c.universe.begin(), c.universe.end(), name);
        if (it == c.universe.end() || *it != name) {
          fail(where, "unknown universe point '" + name + "'");
        }
        c.covers[e].push_back(static_cast<int>(it - c.universe.begin()));
      }
      std::sort(c.covers[e].begin(), c.covers[e].end());
      c.covers[e].erase(std::unique(c.covers[e].begin(), c.covers[e].end()),
                        c.covers[e].end());
    }
    if (std::find(present.begin(), present.end(), false) != present.end()) {
      fail(where, "every element needs a covers entry (may be empty)");
    }
    return {direction, std::move(c)};
  }
  if (kind == "fvs") {
    if (direction != Direction::kCovering) {
      fail(where, "fvs feasibility is a covering family");
    }
    FvsFeasibility f;
    for (const auto& [id, e] : ids.index) f.graph.add_vertex(id);
    f.vertex_of_element.resize(n);
    for (const auto& [id, e] : ids.index) {
      f.vertex_of_element[e] = f.graph.vertex_index(id);
    }
    std::set<std::pair<int, int>> seen;
    for (const auto& pair : field(j, where, "edges")) {
      if (!pair.is_array() || pair.size() != 2) {
        fail(where, "edges must be [u, v] pairs");
      }
      int u = f.graph.vertex_index(str(pair[0], where));
      int v = f.graph.vertex_index(str(pair[1], where));
      if (u < 0 || v < 0) fail(where, "fvs edge endpoint is not an element");
      if (u == v) fail(where, "self-loops are not allowed");
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        fail(where, "duplicate edge");
      }
      f.graph.edges.push_back({u, v, 0});
    }
    return {direction, std::move(f)};
  }
  if (kind == "pcst") {
    if (direction != Direction::kCovering) {
      fail(where, "pcst feasibility is a covering family");
    }
    if (objective == nullptr) {
      fail(where, "pcst constraint requires the pcst objective");
    }
    const auto* p = objective->get_if<PcstPenaltyObjective>();
    if (p == nullptr) {
      fail(where, "pcst constraint requires the pcst objective");
    }
    return {direction, PcstFeasibility{p->graph, p->root, p->vertex_of_element}};
  }
  if (kind == "disjointness") {
    if (direction != Direction::kPacking) {
      fail(where, "disjointness is a packing family");
    }
    Disjointness d;
    d.groups.assign(n, {});
    std::vector<std::string> tokens;
    const json& groups = field(j, where, "groups");
    for (const auto& [id, members] : groups.items()) {
      (void)ids.at(id, where);
      for (const auto& tok : members) tokens.push_back(str(tok, where));
    }
    std::sort(tokens.begin(), tokens.end());
    tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
    std::vector<bool> present(n, false);
    for (const auto& [id, members] : groups.items()) {
      int e = ids.at(id, where);
      present[e] = true;
      for (const auto& tok : members) {
        auto it = std::lower_bound(tokens.begin(), tokens.end(),
                                   tok.get<std::string>());
        d.groups[e].push_back(static_cast<int>(it - tokens.begin()));
      }
    }
    if (std::find(present.begin(), present.end(), false) != present.end()) {
      fail(where, "every element needs a groups entry");
    }
    return {direction, std::move(d)};
  }
  fail(where, "unknown constraint kind '" + kind + "'");
}

SemiadditiveObjective parse_objective(const json& j, const std::string& where,
                                      const IdIndex& ids, int n) {
  std::string kind = str(field(j, where, "kind"), where + ".kind");
  if (kind == "additive") return SemiadditiveObjective{AdditiveObjective{}};
  if (kind == "facility-location") {
    FacilityLocationObjective f;
    for (const auto& p : field(j, where, "points")) {
      f.points.push_back(str(p, where));
    }
    std::sort(f.points.begin(), f.points.end());
    if (std::adjacent_find(f.points.begin(), f.points.end()) !=
        f.points.end()) {
      fail(where, "duplicate metric point");
    }
    auto point_index = [&](const std::string& name) {
      auto it = std::lower_bound(f.points.begin(), f.points.end(), name);
      if (it == f.points.end() || *it != name) {
        fail(where, "unknown metric point '" + name + "'");
      }
      return static_cast<int>(it - f.points.begin());
    };
    const json& dist = field(j, where, "dist");
    std::size_t m = f.points.size();
    if (dist.size() != m) fail(where, "dist matrix has wrong shape");
    f.dist.assign(m, std::vector<double>(m, 0));
    for (std::size_t a = 0; a < m; ++a) {
      if (dist[a].size() != m) fail(where, "dist matrix has wrong shape");
      for (std::size_t b = 0; b < m; ++b) {
        f.dist[a][b] = number(dist[a][b], where);
        if (f.dist[a][b] < 0) fail(where, "distances must be >= 0");
      }
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (f.dist[a][a] != 0) fail(where, "metric diagonal must be 0");
      for (std::size_t b = 0; b < m; ++b) {
        if (std::abs(f.dist[a][b] - f.dist[b][a]) > kMetricSymTol) {
          fail(where, "metric must be symmetric");
        }
        for (std::size_t c = 0; c < m; ++c) {
          if (f.dist[a][b] > f.dist[a][c] + f.dist[c][b] + kTriangleSlack) {
            fail(where, "metric violates the triangle inequality");
          }
        }
      }
    }
    const json& clients = field(j, where, "clients");
    if (clients.empty()) fail(where, "facility location needs clients");
    for (const auto& c : clients) f.clients.push_back(point_index(str(c, where)));
    f.facility_point.resize(n);
    // The sorted iteration order of IdIndex matches element indices.
    int e = 0;
    for (const auto& [id, idx] : ids.index) {
      (void)idx;
      f.facility_point[e++] = point_index(id);
    }
    return SemiadditiveObjective{std::move(f)};
  }
  if (kind == "pcst") {
    PcstPenaltyObjective p;
    std::string root_name = str(field(j, where, "root"), where);
    for (const auto& [id, idx] : ids.index) {
      (void)idx;
      p.graph.add_vertex(id);
    }
    if (p.graph.vertex_index(root_name) >= 0) {
      fail(where, "root must not be an element");
    }
    p.graph.add_vertex(root_name);
    for (const auto& e : field(j, where, "edges")) {
      if (!e.is_array() || e.size() != 3) {
        fail(where, "pcst edges must be [u, v, cost] triples");
      }
      int u = p.graph.vertex_index(str(e[0], where));
      int v = p.graph.vertex_index(str(e[1], where));
      if (u < 0 || v < 0) fail(where, "pcst edge endpoint is unknown");
      if (u == v) fail(where, "self-loops are not allowed");
      double cost = number(e[2], where);
      if (cost < 0) fail(where, "edge costs must be >= 0");
      p.graph.edges.push_back({u, v, cost});
    }
    if (static_cast<int>(p.graph.vertices.size()) - 1 > kMaxPcstVertices) {
      fail(where, "pcst instances are capped at 10 non-root vertices");
    }
    if (!p.graph.connected()) fail(where, "pcst graph must be connected");
    p.root = p.graph.vertex_index(root_name);
    p.vertex_of_element.resize(n);
    p.element_of_vertex.assign(p.graph.vertices.size(), -1);
    for (const auto& [id, e] : ids.index) {
      int v = p.graph.vertex_index(id);
      p.vertex_of_element[e] = v;
      p.element_of_vertex[v] = e;
    }
    std::vector<int> terminals;
    for (int v = 0; v < static_cast<int>(p.graph.vertices.size()); ++v) {
      if (v != p.root) terminals.push_back(v);
    }
    p.steiner_cost = steiner_tree_table(p.graph, p.root, terminals);
    return SemiadditiveObjective{std::move(p)};
  }
  fail(where, "unknown objective kind '" + kind + "'");
}

json write_constraint(const ConstraintSpec& c, const PoiInstance& inst);
json write_objective(const SemiadditiveObjective& o, const PoiInstance& inst);

}  // namespace

PoiInstance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("instance", "top level must be an object");
  if (static_cast<int>(number(field(j, "instance", "version"), "version")) !=
      1) {
    fail("version", "unsupported version (expected 1)");
  }
  std::string dir = str(field(j, "instance", "direction"), "direction");
  if (dir != "packing" && dir != "covering") {
    fail("direction", "must be 'packing' or 'covering'");
  }
  Direction direction =
      dir == "packing" ? Direction::kPacking : Direction::kCovering;

  const json& elems = field(j, "instance", "elements");
  if (!elems.is_array() || elems.empty()) {
    fail("elements", "must be a nonempty array");
  }
  std::vector<ProbeElement> elements;
  for (const auto& e : elems) {
    std::string id = str(field(e, "elements", "id"), "elements.id");
    std::string where = "elements." + id;
    std::vector<double> support;
    std::vector<double> probs;
    for (const auto& v : field(e, where, "support")) {
      support.push_back(number(v, where + ".support"));
    }
    for (const auto& v : field(e, where, "probs")) {
      probs.push_back(number(v, where + ".probs"));
    }
    DiscreteDistribution dist = [&] {
      try {
        return DiscreteDistribution(std::move(support), std::move(probs));
      } catch (const std::invalid_argument& ex) {
        fail(where, ex.what());
      }
    }();
    double price = number(field(e, where, "price"), where + ".price");
    bool fallback = false;
    if (auto it = e.find("fallback"); it != e.end()) {
      if (!it->is_boolean()) fail(where, "'fallback' must be a boolean");
      fallback = it->get<bool>();
    }
    elements.push_back({id, std::move(dist), price, fallback});
  }
  std::sort(elements.begin(), elements.end(),
            [](const ProbeElement& a, const ProbeElement& b) {
              return a.id < b.id;
            });
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1].id == elements[i].id) {
      fail("elements", "duplicate element id '" + elements[i].id + "'");
    }
  }
  IdIndex ids;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    ids.index[elements[i].id] = static_cast<int>(i);
  }
  int n = static_cast<int>(elements.size());

  SemiadditiveObjective objective =
      parse_objective(field(j, "instance", "objective"), "objective", ids, n);
  ConstraintSpec constraint =
      parse_constraint(field(j, "instance", "constraint"), direction,
                       "constraint", ids, n, &objective);

  std::optional<ConstraintSpec> probing;
  if (auto it = j.find("probing_constraint"); it != j.end()) {
    probing = parse_constraint(*it, Direction::kPacking, "probing_constraint",
                               ids, n, nullptr);
  }

  std::optional<SetProbeFamily> set_probing;
  if (auto it = j.find("set_probing"); it != j.end()) {
    SetProbeFamily fam;
    for (const auto& s : *it) {
      ProbeSet ps;
      ps.id = str(field(s, "set_probing", "id"), "set_probing.id");
      std::string where = "set_probing." + ps.id;
      for (const auto& m : field(s, where, "members")) {
        ps.members.push_back(ids.at(str(m, where), where));
      }
      std::sort(ps.members.begin(), ps.members.end());
      ps.members.erase(std::unique(ps.members.begin(), ps.members.end()),
                       ps.members.end());
      if (ps.members.empty()) fail(where, "members must be nonempty");
      ps.price = number(field(s, where, "price"), where + ".price");
      if (ps.price < 0) fail(where, "price must be >= 0");
      fam.sets.push_back(std::move(ps));
    }
    std::sort(fam.sets.begin(), fam.sets.end(),
              [](const ProbeSet& a, const ProbeSet& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < fam.sets.size(); ++i) {
      if (fam.sets[i - 1].id == fam.sets[i].id) {
        fail("set_probing", "duplicate set id '" + fam.sets[i].id + "'");
      }
    }
    set_probing = std::move(fam);
  }

  try {
    return PoiInstance(std::move(elements), direction, std::move(constraint),
                       std::move(objective), std::move(probing),
                       std::move(set_probing));
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw ParseError(ex.what());
  }
}

PoiInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

namespace {

json graph_edges_json(const Graph& g, const std::vector<int>& edge_of_element,
                      const PoiInstance& inst) {
  json edges = json::object();
  for (int i = 0; i < inst.size(); ++i) {
    const auto& e = g.edges[edge_of_element[i]];
    edges[inst.elements()[i].id] =
        json::array({g.vertices[e.u], g.vertices[e.v]});
  }
  json out = json::object();
  out["edges"] = std::move(edges);
  out["vertices"] = g.vertices;
  return out;
}

json write_constraint(const ConstraintSpec& c, const PoiInstance& inst) {
  json out = json::object();
  if (const auto* u = c.get_if<UniformMatroid>()) {
    out["kind"] = "uniform-matroid";
    out["rank"] = u->rank;
  } else if (const auto* p = c.get_if<PartitionMatroid>()) {
    out["kind"] = "partition-matroid";
    json parts = json::array();
    for (std::size_t k = 0; k < p->parts.size(); ++k) {
      json part = json::object();
      json members = json::array();
      for (int i : p->parts[k]) members.push_back(inst.elements()[i].id);
      part["members"] = std::move(members);
      part["cap"] = p->caps[k];
      parts.push_back(std::move(part));
    }
    out["parts"] = std::move(parts);
  } else if (const auto* g = c.get_if<GraphicMatroid>()) {
    out = graph_edges_json(g->graph, g->edge_of_element, inst);
    out["kind"] = "graphic-matroid";
  } else if (const auto* m = c.get_if<MatchingSystem>()) {
    out = graph_edges_json(m->graph, m->edge_of_element, inst);
    out["kind"] = "matching";
  } else if (const auto* f = c.get_if<ExplicitFamily>()) {
    out["kind"] = "explicit";
    json sets = json::array();
    for (ElementMask s : f->sets) sets.push_back(inst.ids_of(s));
    out["sets"] = std::move(sets);
  } else if (const auto* k = c.get_if<KnapsackConstraint>()) {
    out["kind"] = "knapsack";
    out["capacity"] = k->capacity;
    json sizes = json::object();
    for (int i = 0; i < inst.size(); ++i) {
      sizes[inst.elements()[i].id] = k->sizes[i];
    }
    out["sizes"] = std::move(sizes);
  } else if (const auto* sc = c.get_if<SetCoverFeasibility>()) {
    out["kind"] = "set-cover";
    out["universe"] = sc->universe;
    json covers = json::object();
    for (int i = 0; i < inst.size(); ++i) {
      json pts = json::array();
      for (int u : sc->covers[i]) pts.push_back(sc->universe[u]);
      covers[inst.elements()[i].id] = std::move(pts);
    }
    out["covers"] = std::move(covers);
  } else if (const auto* sp = c.get_if<SpanningFeasibility>()) {
    out = graph_edges_json(sp->graph, sp->edge_of_element, inst);
    out["kind"] = "spanning";
  } else if (const auto* fv = c.get_if<FvsFeasibility>()) {
    out["kind"] = "fvs";
    json edges = json::array();
    for (const auto& e : fv->graph.edges) {
      edges.push_back(json::array(
          {fv->graph.vertices[e.u], fv->graph.vertices[e.v]}));
    }
    out["edges"] = std::move(edges);
  } else if (c.get_if<PcstFeasibility>()) {
    out["kind"] = "pcst";
  } else if (const auto* d = c.get_if<Disjointness>()) {
    out["kind"] = "disjointness";
    // Zero-padded token names keep the lexicographic order equal to the
    // numeric one, so rewriting after a parse is byte-stable.
    int max_tok = 0;
    for (const auto& g : d->groups) {
      for (int t : g) max_tok = std::max(max_tok, t);
    }
    std::size_t width = std::to_string(max_tok).size();
    json groups = json::object();
    for (int i = 0; i < inst.size(); ++i) {
      json toks = json::array();
      for (int t : d->groups[i]) {
        std::string name = std::to_string(t);
        toks.push_back("t" + std::string(width - name.size(), '0') + name);
      }
      groups[inst.elements()[i].id] = std::move(toks);
    }
    out["groups"] = std::move(groups);
  }
  return out;
}

json write_objective(const SemiadditiveObjective& o, const PoiInstance& inst) {
  (void)inst;
  json out = json::object();
  if (o.get_if<AdditiveObjective>() != nullptr) {
    out["kind"] = "additive";
  } else if (const auto* f = o.get_if<FacilityLocationObjective>()) {
    out["kind"] = "facility-location";
    out["points"] = f->points;
    json clients = json::array();
    for (int c : f->clients) clients.push_back(f->points[c]);
    out["clients"] = std::move(clients);
    out["dist"] = f->dist;
  } else if (const auto* p = o.get_if<PcstPenaltyObjective>()) {
    out["kind"] = "pcst";
    out["root"] = p->graph.vertices[p->root];
    json edges = json::array();
    for (const auto& e : p->graph.edges) {
      edges.push_back(json::array(
          {p->graph.vertices[e.u], p->graph.vertices[e.v], e.cost}));
    }
    out["edges"] = std::move(edges);
  }
  return out;
}

}  // namespace

std::string write_instance(const PoiInstance& inst) {
  json j = json::object();
  j["version"] = 1;
  j["direction"] =
      inst.direction() == Direction::kPacking ? "packing" : "covering";
  j["objective"] = write_objective(inst.objective(), inst);
  j["constraint"] = write_constraint(inst.constraint(), inst);
  if (inst.probing_constraint()) {
    j["probing_constraint"] = write_constraint(*inst.probing_constraint(), inst);
  }
  if (inst.set_probing()) {
    json sets = json::array();
    for (const auto& s : inst.set_probing()->sets) {
      json ps = json::object();
      ps["id"] = s.id;
      json members = json::array();
      for (int m : s.members) members.push_back(inst.elements()[m].id);
      ps["members"] = std::move(members);
      ps["price"] = s.price;
      sets.push_back(std::move(ps));
    }
    j["set_probing"] = std::move(sets);
  }
  json elems = json::array();
  for (const auto& e : inst.elements()) {
    json el = json::object();
    el["id"] = e.id;
    el["support"] = e.dist.support();
    el["probs"] = e.dist.probs();
    el["price"] = e.price;
    if (e.fallback) el["fallback"] = true;
    elems.push_back(std::move(el));
  }
  j["elements"] = std::move(elems);
  return j.dump(2) + "\n";
}

void save_instance(const PoiInstance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write instance file: " + path);
  out << write_instance(inst);
}

}  // namespace poi
