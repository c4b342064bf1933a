// Copyright 2026 The qpath Authors
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

#include "qpath/circuit_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <queue>
#include <sstream>

#include "qpath/unitary_metric.hpp"

namespace qpath {

namespace {

void append_slot(std::vector<int>& slots, std::optional<int> slot) {
  if (slot && std::find(slots.begin(), slots.end(), *slot) == slots.end()) {
    slots.push_back(*slot);
  }
}

// Builds a Path from a forward sequence of edge ids.
Path path_from_edges(const CircuitGraph& g, const std::vector<int>& edge_ids) {
  Path p;
  p.nodes.push_back(g.nodes()[g.edges()[edge_ids.front()].from]);
  for (int e : edge_ids) {
    const GraphEdge& edge = g.edges()[e];
    p.nodes.push_back(g.nodes()[edge.to]);
    p.gates.push_back(edge.gate);
    append_slot(p.slots, edge.param_slot);
    p.weight += edge.weight;
  }
  return p;
}

Path single_node_path(GraphNode node) {
  Path p;
  p.nodes.push_back(node);
  return p;
}

}  // namespace

std::string to_string(EdgeLeg leg) {
  switch (leg) {
    case EdgeLeg::Wire: return "wire";
    case EdgeLeg::StraightAC: return "ac";
    case EdgeLeg::StraightBD: return "bd";
    case EdgeLeg::DiagonalAD: return "ad";
    case EdgeLeg::DiagonalBC: return "bc";
  }
  return "?";
}

void CircuitGraph::index() {
  in_.assign(nodes_.size(), {});
  out_.assign(nodes_.size(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    out_[edges_[e].from].push_back(e);
    in_[edges_[e].to].push_back(e);
  }
  terminal_segment_.assign(n_qubits_, -1);
  for (const auto& n : nodes_) {
    terminal_segment_[n.qubit] = std::max(terminal_segment_[n.qubit], n.segment);
  }
}

std::optional<int> CircuitGraph::find(GraphNode node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), node);
  if (it == nodes_.end() || *it != node) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

int CircuitGraph::id(GraphNode node) const {
  auto found = find(node);
  if (!found) {
    throw std::out_of_range("node q" + std::to_string(node.qubit) + "s" +
                            std::to_string(node.segment) + " not in graph");
  }
  return *found;
}

std::optional<GraphNode> CircuitGraph::terminal(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_ || terminal_segment_[qubit] < 0) return std::nullopt;
  return GraphNode{qubit, terminal_segment_[qubit]};
}

std::set<int> CircuitGraph::parameter_slots() const {
  std::set<int> slots;
  for (const auto& e : edges_) {
    if (e.param_slot) slots.insert(*e.param_slot);
  }
  return slots;
}

CircuitGraph build_topology(const Circuit& circuit) {
  CircuitGraph g;
  g.n_qubits_ = circuit.n_qubits();

  std::vector<int> segments(circuit.n_qubits(), 0);
  struct Pending {
    GraphNode from, to;
    int gate;
    EdgeLeg leg;
  };
  std::vector<Pending> pending;
  for (int gi : circuit.schedule()) {
    const GateInstance& gate = circuit.gates()[gi];
    if (gate.qubits.size() == 1) {
      const int q = gate.qubits[0];
      pending.push_back({{q, segments[q]}, {q, segments[q] + 1}, gi, EdgeLeg::Wire});
      ++segments[q];
    } else {
      const int q1 = gate.qubits[0];
      const int q2 = gate.qubits[1];
      const GraphNode a{q1, segments[q1]}, b{q2, segments[q2]};
      const GraphNode c{q1, segments[q1] + 1}, d{q2, segments[q2] + 1};
      pending.push_back({a, c, gi, EdgeLeg::StraightAC});
      pending.push_back({b, d, gi, EdgeLeg::StraightBD});
      pending.push_back({a, d, gi, EdgeLeg::DiagonalAD});
      pending.push_back({b, c, gi, EdgeLeg::DiagonalBC});
      ++segments[q1];
      ++segments[q2];
    }
  }
  for (int q = 0; q < circuit.n_qubits(); ++q) {
    for (int s = 0; s <= segments[q]; ++s) g.nodes_.push_back({q, s});
  }
  for (const auto& p : pending) {
    g.edges_.push_back({g.id(p.from), g.id(p.to), p.gate, p.leg,
                        circuit.gates()[p.gate].param_slot, 0.0});
  }
  g.index();
  return g;
}

void assign_weights(CircuitGraph& graph, const Circuit& circuit, const ParamVector& params) {
  if (params.size() != circuit.n_params()) {
    throw std::invalid_argument("expected " + std::to_string(circuit.n_params()) +
                                " parameters, got " + std::to_string(params.size()));
  }
  // One metric evaluation per gate, shared by its four edges.
  std::vector<std::optional<std::array<double, 4>>> cache(circuit.gates().size());
  for (auto& e : graph.edges_) {
    if (e.leg == EdgeLeg::Wire) {
      e.weight = 0.0;
      continue;
    }
    auto& d = cache[e.gate];
    if (!d) {
      const GateInstance& gate = circuit.gates()[e.gate];
      const double angle = gate.param_slot ? params(*gate.param_slot) : 0.0;
      d = leg_distances(two_qubit_matrix(gate.kind, angle));
    }
    e.weight = (*d)[static_cast<int>(e.leg) - 1];
  }
}

CircuitGraph build_graph(const Circuit& circuit, const ParamVector& params) {
  CircuitGraph g = build_topology(circuit);
  assign_weights(g, circuit, params);
  return g;
}

CircuitGraph causal_cone(const CircuitGraph& graph, const std::vector<int>& measured) {
  if (measured.empty()) throw std::invalid_argument("causal_cone: no measured qubits");
  std::vector<bool> keep(graph.nodes_.size(), false);
  std::vector<int> stack;
  for (int q : measured) {
    auto t = graph.terminal(q);
    if (!t) throw std::out_of_range("causal_cone: qubit " + std::to_string(q) + " not in graph");
    const int id = graph.id(*t);
    if (!keep[id]) {
      keep[id] = true;
      stack.push_back(id);
    }
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : graph.in_[v]) {
      const int u = graph.edges_[e].from;
      if (!keep[u]) {
        keep[u] = true;
        stack.push_back(u);
      }
    }
  }

  CircuitGraph cone;
  cone.n_qubits_ = graph.n_qubits_;
  std::vector<int> remap(graph.nodes_.size(), -1);
  for (std::size_t v = 0; v < graph.nodes_.size(); ++v) {
    if (keep[v]) {
      remap[v] = static_cast<int>(cone.nodes_.size());
      cone.nodes_.push_back(graph.nodes_[v]);
    }
  }
  for (const auto& e : graph.edges_) {
    if (keep[e.from] && keep[e.to]) {
      GraphEdge copy = e;
      copy.from = remap[e.from];
      copy.to = remap[e.to];
      cone.edges_.push_back(copy);
    }
  }
  cone.index();
  return cone;
}

namespace {

// paths[v] = number of paths from an initial node to v, in topological order.
std::vector<double> path_counts(const CircuitGraph& g) {
  std::vector<int> indeg(g.nodes().size());
  for (std::size_t v = 0; v < indeg.size(); ++v) indeg[v] = static_cast<int>(g.in_edges(v).size());
  std::vector<int> ready;
  for (std::size_t v = 0; v < indeg.size(); ++v) {
    if (indeg[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::vector<double> count(g.nodes().size(), 0.0);
  std::size_t visited = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++visited;
    if (g.in_edges(v).empty()) count[v] = 1.0;
    for (int e : g.out_edges(v)) {
      const int w = g.edges()[e].to;
      count[w] += count[v];
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  if (visited != g.nodes().size()) throw std::logic_error("circuit graph has a cycle");
  return count;
}

}  // namespace

double count_paths(const CircuitGraph& cone, GraphNode terminal) {
  return path_counts(cone)[cone.id(terminal)];
}

Path sample_random_path(const CircuitGraph& cone, GraphNode terminal, Rng& rng) {
  const int t = cone.id(terminal);
  const std::vector<double> count = path_counts(cone);
  std::vector<int> reversed;
  int v = t;
  while (!cone.in_edges(v).empty()) {
    const auto& in = cone.in_edges(v);
    // Weighting each in-edge by the number of paths reaching its source makes
    // every complete path equally likely.
    std::uniform_real_distribution<double> pick(0.0, count[v]);
    double r = pick(rng);
    int chosen = in.back();
    for (int e : in) {
      r -= count[cone.edges()[e].from];
      if (r < 0.0) {
        chosen = e;
        break;
      }
    }
    reversed.push_back(chosen);
    v = cone.edges()[chosen].from;
  }
  if (!cone.is_initial(v)) throw std::logic_error("random walk stopped before an initial node");
  if (reversed.empty()) return single_node_path(terminal);
  std::reverse(reversed.begin(), reversed.end());
  return path_from_edges(cone, reversed);
}

std::vector<Path> shortest_paths(const CircuitGraph& cone, GraphNode terminal) {
  const int t = cone.id(terminal);
  const std::size_t n = cone.nodes().size();

  // Distances to the terminal over finite edges (Dijkstra on reversed edges).
  std::vector<double> dist(n, kInfinity);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[t] = 0.0;
  heap.push({0.0, t});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (int e : cone.in_edges(v)) {
      const GraphEdge& edge = cone.edges()[e];
      if (!std::isfinite(edge.weight)) continue;
      const double nd = d + edge.weight;
      if (nd < dist[edge.from]) {
        dist[edge.from] = nd;
        heap.push({nd, edge.from});
      }
    }
  }

  auto on_optimal = [&](int u, const GraphEdge& edge) {
    if (!std::isfinite(edge.weight) || !std::isfinite(dist[edge.to])) return false;
    const double via = edge.weight + dist[edge.to];
    return std::abs(via - dist[u]) <= 1e-12 * std::max(1.0, std::abs(dist[u]));
  };

  std::vector<Path> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (!cone.is_initial(static_cast<int>(s)) || !std::isfinite(dist[s])) continue;
    if (static_cast<int>(s) == t) {
      out.push_back(single_node_path(terminal));
      continue;
    }
    std::vector<int> route;
    int u = static_cast<int>(s);
    while (u != t) {
      int best = -1;
      for (int e : cone.out_edges(u)) {
        const GraphEdge& edge = cone.edges()[e];
        if (on_optimal(u, edge) && (best < 0 || edge.to < cone.edges()[best].to)) best = e;
      }
      if (best < 0) throw std::logic_error("shortest path reconstruction lost the optimum");
      route.push_back(best);
      u = cone.edges()[best].to;
    }
    out.push_back(path_from_edges(cone, route));
  }
  if (out.empty()) {
    throw DisconnectedConeError("no finite-weight path reaches q" + std::to_string(terminal.qubit) +
                                "s" + std::to_string(terminal.segment));
  }
  return out;
}

std::vector<int> path_parameters(const Path& path, const Circuit& circuit) {
  std::vector<int> slots;
  for (int g : path.gates) append_slot(slots, circuit.gates().at(g).param_slot);
  return slots;
}

void write_dot(std::ostream& out, const CircuitGraph& graph, const Circuit& circuit) {
  auto name = [](const GraphNode& n) {
    return "q" + std::to_string(n.qubit) + "s" + std::to_string(n.segment);
  };
  out << "digraph circuit {\n  rankdir=LR;\n";
  for (const auto& n : graph.nodes()) out << "  " << name(n) << ";\n";
  for (const auto& e : graph.edges()) {
    std::ostringstream w;
    if (std::isinf(e.weight)) {
      w << "+inf";
    } else {
      w.precision(6);
      w << e.weight;
    }
    const GateInstance& gate = circuit.gates().at(e.gate);
    out << "  " << name(graph.nodes()[e.from]) << " -> " << name(graph.nodes()[e.to])
        << " [label=\"" << to_string(gate.kind) << ":" << to_string(e.leg) << " " << w.str()
        << "\", weight=\"" << w.str() << "\"];\n";
  }
  out << "}\n";
}

}  // namespace qpath
