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

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpath/circuit.hpp"
#include "qpath/circuit_graph.hpp"

namespace qpath {

enum class Strategy { RandomPath, ShortestPath, CombinedPaths, SgdBaseline, NesterovBaseline };

std::string to_string(Strategy strategy);

/// Accepts the canonical names (random-path, ...) and the short forms
/// random, shortest, combined, sgd, nesterov.
Strategy strategy_from_string(const std::string& name);

bool is_path_strategy(Strategy strategy);

struct OptimizerConfig {
  double learning_rate = 0.1;
  int max_iterations = 100;
  double momentum = 0.9;
  std::optional<int> n_shots;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

/// A differentiable objective built from terms that are each read out on a
/// fixed set of qubits of `circuit()`.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual const Circuit& circuit() const = 0;
  virtual double value(const ParamVector& params) const = 0;

  /// Partial derivatives of value() with respect to `slots`, in order. May
  /// draw from `rng` when the objective is estimated from shots.
  virtual Eigen::VectorXd gradient(const ParamVector& params, std::span<const int> slots,
                                   Rng& rng) const = 0;

  /// Measured qubits of each term; an empty set marks a constant term.
  virtual std::vector<std::vector<int>> term_qubits() const = 0;

  virtual std::optional<double> accuracy(const ParamVector&) const { return std::nullopt; }
};

/// f(theta) = <H>_theta, with n-shot gradients when `n_shots` is set.
class HamiltonianObjective : public Objective {
 public:
  HamiltonianObjective(Circuit circuit, Hamiltonian ham, std::optional<int> n_shots = {});

  const Circuit& circuit() const override { return circuit_; }
  const Hamiltonian& hamiltonian() const { return ham_; }
  double value(const ParamVector& params) const override;
  Eigen::VectorXd gradient(const ParamVector& params, std::span<const int> slots,
                           Rng& rng) const override;
  std::vector<std::vector<int>> term_qubits() const override;

 private:
  Circuit circuit_;
  Hamiltonian ham_;
  std::optional<int> n_shots_;
};

struct IterationRecord {
  int iteration = 0;
  double objective = 0.0;
  std::optional<double> accuracy;
  int updates = 0;  // parameter-slot updates applied during this iteration
};

struct Trajectory {
  std::vector<IterationRecord> records;
  ParamVector final_params;
  int fallbacks = 0;  // shortest-path selections that fell back to a random path
};

/// One path to `terminal` for a path strategy. Random and combined draw
/// uniformly over all paths; shortest draws uniformly among the per-start
/// shortest paths and falls back to a random path (incrementing `fallbacks`)
/// when the cone is metric-disconnected.
Path select_path(const CircuitGraph& cone, GraphNode terminal, Strategy strategy, Rng& rng,
                 int& fallbacks);

/// Path-based optimization. Each iteration reweights the graph from the
/// current parameters and selects one path per measured qubit of every
/// objective term (every qubit for combined paths). It then walks the
/// selected paths in order, applying a gradient step to each path's
/// parameters; later steps see earlier updates.
Trajectory path_optimize(const Objective& objective, const ParamVector& init, Strategy strategy,
                         const OptimizerConfig& config, Rng& rng);

Trajectory path_optimize(const Circuit& circuit, const Hamiltonian& ham, const ParamVector& init,
                         Strategy strategy, const OptimizerConfig& config, Rng& rng);

/// Full-gradient descent theta <- theta - alpha * grad.
Trajectory sgd_optimize(const Objective& objective, const ParamVector& init,
                        const OptimizerConfig& config, Rng& rng);

Trajectory sgd_optimize(const Circuit& circuit, const Hamiltonian& ham, const ParamVector& init,
                        const OptimizerConfig& config, Rng& rng);

/// Nesterov accelerated gradient: g at theta + mu v, v <- mu v - alpha g,
/// theta <- theta + v, starting from v = 0.
Trajectory nesterov_optimize(const Objective& objective, const ParamVector& init,
                             const OptimizerConfig& config, Rng& rng);

/// Dispatches to the optimizer matching `strategy`.
Trajectory optimize(const Objective& objective, const ParamVector& init, Strategy strategy,
                    const OptimizerConfig& config, Rng& rng);

}  // namespace qpath
