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

// Circuits as time-directed weighted graphs.
//
// Every wire segment is a node (qubit, segment): segment 0 precedes the first
// gate on the qubit and each gate touching the qubit opens a new segment. A
// single-qubit gate becomes one edge; a two-qubit gate on (q1, q2) becomes the
// four edges a->c, b->d, a->d, b->c where a, b are its input segments on q1,
// q2 and c, d the output segments.

#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "qpath/circuit.hpp"

namespace qpath {

struct GraphNode {
  int qubit = 0;
  int segment = 0;

  friend auto operator<=>(const GraphNode&, const GraphNode&) = default;
};

enum class EdgeLeg { Wire, StraightAC, StraightBD, DiagonalAD, DiagonalBC };

struct GraphEdge {
  int from = 0;  // node id
  int to = 0;    // node id
  int gate = 0;  // index into Circuit::gates()
  EdgeLeg leg = EdgeLeg::Wire;
  std::optional<int> param_slot;
  double weight = 0.0;
};

/// Node ids are assigned in (qubit, segment) order, so comparing ids compares
/// nodes lexicographically.
class CircuitGraph {
 public:
  int n_qubits() const { return n_qubits_; }
  const std::vector<GraphNode>& nodes() const { return nodes_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<int>& in_edges(int node) const { return in_[node]; }
  const std::vector<int>& out_edges(int node) const { return out_[node]; }

  /// Node id, or nullopt when the node is not part of this graph.
  std::optional<int> find(GraphNode node) const;
  int id(GraphNode node) const;

  /// Last segment of `qubit`, or nullopt if the qubit has no node here.
  std::optional<GraphNode> terminal(int qubit) const;
  GraphNode initial(int qubit) const { return {qubit, 0}; }

  bool is_initial(int node) const { return nodes_[node].segment == 0; }

  /// Overrides one edge weight.
  void set_weight(int edge, double weight) { edges_.at(edge).weight = weight; }

  /// Parameter slots carried by any edge, ascending.
  std::set<int> parameter_slots() const;

  friend CircuitGraph build_topology(const Circuit& circuit);
  friend CircuitGraph causal_cone(const CircuitGraph& graph, const std::vector<int>& measured);
  friend void assign_weights(CircuitGraph& graph, const Circuit& circuit, const ParamVector& params);

 private:
  void index();

  int n_qubits_ = 0;
  std::vector<GraphNode> nodes_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
  std::vector<int> terminal_segment_;  // -1 when the qubit is absent
};

/// A forward path ending at a terminal node.
struct Path {
  std::vector<GraphNode> nodes;
  std::vector<int> gates;  // gate index per traversed edge
  std::vector<int> slots;  // parameter slots in traversal order, deduplicated
  double weight = 0.0;
};

/// Raised by shortest_paths when no initial node reaches the terminal through
/// finite-weight edges.
class DisconnectedConeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nodes and edges with every weight set to zero.
CircuitGraph build_topology(const Circuit& circuit);

/// Sets single-qubit edges to 0 and two-qubit edges to the modified leg
/// distance of the gate's current unitary.
void assign_weights(CircuitGraph& graph, const Circuit& circuit, const ParamVector& params);

CircuitGraph build_graph(const Circuit& circuit, const ParamVector& params);

/// Subgraph of every node that reaches a terminal node of a measured qubit.
CircuitGraph causal_cone(const CircuitGraph& graph, const std::vector<int>& measured);

/// Draws a path ending at `terminal` uniformly from all paths in the cone
/// that start at an initial node.
Path sample_random_path(const CircuitGraph& cone, GraphNode terminal, Rng& rng);

/// For every initial node with a finite-weight route to `terminal`, the
/// minimum-weight path from it. Infinite-weight edges are skipped; ties go to
/// the lexicographically smallest node sequence. Ordered by start node.
std::vector<Path> shortest_paths(const CircuitGraph& cone, GraphNode terminal);

/// Number of distinct paths from initial nodes to `terminal`.
double count_paths(const CircuitGraph& cone, GraphNode terminal);

/// Parameter slots of the gates `path` traverses, in order, deduplicated.
std::vector<int> path_parameters(const Path& path, const Circuit& circuit);

/// Graphviz export with nodes named q<qubit>s<segment>; infinite weights are
/// written as +inf.
void write_dot(std::ostream& out, const CircuitGraph& graph, const Circuit& circuit);

std::string to_string(EdgeLeg leg);

}  // namespace qpath
