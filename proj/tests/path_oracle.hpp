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

// Exhaustive path enumeration by depth-first search from every initial node.

#pragma once

#include <limits>
#include <vector>

#include "qpath/circuit_graph.hpp"

namespace oracle {

using NodePath = std::vector<qpath::GraphNode>;

inline void extend(const qpath::CircuitGraph& g, int v, int target, std::vector<int>& stack,
                   std::vector<NodePath>& out) {
  stack.push_back(v);
  if (v == target) {
    NodePath p;
    for (int id : stack) p.push_back(g.nodes()[id]);
    out.push_back(std::move(p));
  } else {
    for (int e : g.out_edges(v)) extend(g, g.edges()[e].to, target, stack, out);
  }
  stack.pop_back();
}

inline std::vector<NodePath> all_paths(const qpath::CircuitGraph& g, qpath::GraphNode terminal) {
  std::vector<NodePath> out;
  std::vector<int> stack;
  const int t = g.id(terminal);
  for (int v = 0; v < static_cast<int>(g.nodes().size()); ++v) {
    if (g.nodes()[v].segment == 0) extend(g, v, t, stack, out);
  }
  return out;
}

// Sum of the cheapest edge between each consecutive node pair. Parallel
// edges between the same two nodes cannot occur, so this is the path weight.
inline double path_weight(const qpath::CircuitGraph& g, const NodePath& p) {
  double w = 0.0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) {
    const int u = g.id(p[k]), v = g.id(p[k + 1]);
    double edge = std::numeric_limits<double>::infinity();
    for (int e : g.out_edges(u)) {
      if (g.edges()[e].to == v) edge = std::min(edge, g.edges()[e].weight);
    }
    w += edge;
  }
  return w;
}

}  // namespace oracle
