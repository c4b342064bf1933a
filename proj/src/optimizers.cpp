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

#include "qpath/optimizers.hpp"

#include <map>
#include <stdexcept>

#include "qpath/gradients.hpp"

namespace qpath {

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::RandomPath: return "random-path";
    case Strategy::ShortestPath: return "shortest-path";
    case Strategy::CombinedPaths: return "combined-paths";
    case Strategy::SgdBaseline: return "sgd-baseline";
    case Strategy::NesterovBaseline: return "nesterov-baseline";
  }
  throw std::invalid_argument("unknown strategy");
}

Strategy strategy_from_string(const std::string& name) {
  static const std::map<std::string, Strategy> kNames{
      {"random-path", Strategy::RandomPath},       {"random", Strategy::RandomPath},
      {"shortest-path", Strategy::ShortestPath},   {"shortest", Strategy::ShortestPath},
      {"combined-paths", Strategy::CombinedPaths}, {"combined", Strategy::CombinedPaths},
      {"sgd-baseline", Strategy::SgdBaseline},     {"sgd", Strategy::SgdBaseline},
      {"nesterov-baseline", Strategy::NesterovBaseline}, {"nesterov", Strategy::NesterovBaseline},
  };
  auto it = kNames.find(name);
  if (it == kNames.end()) throw std::invalid_argument("unknown strategy '" + name + "'");
  return it->second;
}

bool is_path_strategy(Strategy strategy) {
  return strategy == Strategy::RandomPath || strategy == Strategy::ShortestPath ||
         strategy == Strategy::CombinedPaths;
}

void OptimizerConfig::validate() const {
  if (!(learning_rate > 0)) throw std::invalid_argument("learning rate must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
  if (!(momentum >= 0 && momentum < 1)) throw std::invalid_argument("momentum must lie in [0, 1)");
  if (n_shots && *n_shots < 1) throw std::invalid_argument("n_shots must be at least 1");
}

HamiltonianObjective::HamiltonianObjective(Circuit circuit, Hamiltonian ham,
                                           std::optional<int> n_shots)
    : circuit_(std::move(circuit)), ham_(std::move(ham)), n_shots_(n_shots) {
  if (ham_.n_qubits != circuit_.n_qubits()) {
    throw std::invalid_argument("Hamiltonian and circuit qubit counts differ");
  }
  ham_.validate();
  if (n_shots_ && *n_shots_ < 1) throw std::invalid_argument("n_shots must be at least 1");
}

double HamiltonianObjective::value(const ParamVector& params) const {
  return expectation(evaluate(circuit_, params), ham_);
}

Eigen::VectorXd HamiltonianObjective::gradient(const ParamVector& params,
                                               std::span<const int> slots, Rng& rng) const {
  if (n_shots_) return gradient_nshot(circuit_, ham_, params, slots, *n_shots_, rng);
  return qpath::gradient(circuit_, ham_, params, slots);
}

std::vector<std::vector<int>> HamiltonianObjective::term_qubits() const {
  std::vector<std::vector<int>> out;
  out.reserve(ham_.terms.size());
  for (const auto& t : ham_.terms) out.push_back(t.qubits());
  return out;
}

namespace {

IterationRecord record(const Objective& objective, const ParamVector& params, int iteration,
                       int updates) {
  return {iteration, objective.value(params), objective.accuracy(params), updates};
}

void check_init(const Objective& objective, const ParamVector& init) {
  if (init.size() != objective.circuit().n_params()) {
    throw std::invalid_argument("initial parameters do not match the circuit");
  }
}

}  // namespace

Path select_path(const CircuitGraph& cone, GraphNode terminal, Strategy strategy, Rng& rng,
                 int& fallbacks) {
  if (strategy != Strategy::ShortestPath) return sample_random_path(cone, terminal, rng);
  try {
    const auto candidates = shortest_paths(cone, terminal);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
  } catch (const DisconnectedConeError&) {
    ++fallbacks;
    return sample_random_path(cone, terminal, rng);
  }
}

Trajectory path_optimize(const Objective& objective, const ParamVector& init, Strategy strategy,
                         const OptimizerConfig& config, Rng& rng) {
  if (!is_path_strategy(strategy)) {
    throw std::invalid_argument(to_string(strategy) + " is not a path strategy");
  }
  config.validate();
  check_init(objective, init);

  const Circuit& circuit = objective.circuit();
  const auto terms = objective.term_qubits();
  std::vector<int> every_qubit(circuit.n_qubits());
  for (int q = 0; q < circuit.n_qubits(); ++q) every_qubit[q] = q;

  Trajectory traj;
  ParamVector theta = init;
  traj.records.push_back(record(objective, theta, 0, 0));
  CircuitGraph graph = build_topology(circuit);

  for (int it = 1; it <= config.max_iterations; ++it) {
    if (strategy == Strategy::ShortestPath) assign_weights(graph, circuit, theta);

    // Cones per readout qubit, built lazily and shared by all terms.
    std::vector<std::optional<CircuitGraph>> cones(circuit.n_qubits());
    auto cone_of = [&](int q) -> const CircuitGraph& {
      if (!cones[q]) cones[q] = causal_cone(graph, {q});
      return *cones[q];
    };

    // Select every path before any update.
    std::vector<std::vector<int>> selected;
    for (const auto& qubits : terms) {
      if (qubits.empty()) continue;
      const auto& readout = strategy == Strategy::CombinedPaths ? every_qubit : qubits;
      for (int q : readout) {
        const CircuitGraph& cone = cone_of(q);
        selected.push_back(
            select_path(cone, *cone.terminal(q), strategy, rng, traj.fallbacks).slots);
      }
    }

    int updates = 0;
    for (const auto& slots : selected) {
      if (slots.empty()) continue;
      const Eigen::VectorXd g = objective.gradient(theta, slots, rng);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        theta(slots[i]) = theta(slots[i]) - config.learning_rate * g(static_cast<Eigen::Index>(i));
      }
      updates += static_cast<int>(slots.size());
    }
    traj.records.push_back(record(objective, theta, it, updates));
  }
  traj.final_params = theta;
  return traj;
}

Trajectory path_optimize(const Circuit& circuit, const Hamiltonian& ham, const ParamVector& init,
                         Strategy strategy, const OptimizerConfig& config, Rng& rng) {
  return path_optimize(HamiltonianObjective(circuit, ham, config.n_shots), init, strategy, config,
                       rng);
}

Trajectory sgd_optimize(const Objective& objective, const ParamVector& init,
                        const OptimizerConfig& config, Rng& rng) {
  config.validate();
  check_init(objective, init);
  const std::vector<int> slots = all_slots(objective.circuit());
  Trajectory traj;
  ParamVector theta = init;
  traj.records.push_back(record(objective, theta, 0, 0));
  for (int it = 1; it <= config.max_iterations; ++it) {
    theta -= config.learning_rate * objective.gradient(theta, slots, rng);
    traj.records.push_back(record(objective, theta, it, static_cast<int>(slots.size())));
  }
  traj.final_params = theta;
  return traj;
}

Trajectory sgd_optimize(const Circuit& circuit, const Hamiltonian& ham, const ParamVector& init,
                        const OptimizerConfig& config, Rng& rng) {
  return sgd_optimize(HamiltonianObjective(circuit, ham, config.n_shots), init, config, rng);
}

Trajectory nesterov_optimize(const Objective& objective, const ParamVector& init,
                             const OptimizerConfig& config, Rng& rng) {
  config.validate();
  check_init(objective, init);
  const std::vector<int> slots = all_slots(objective.circuit());
  Trajectory traj;
  ParamVector theta = init;
  ParamVector velocity = ParamVector::Zero(theta.size());
  traj.records.push_back(record(objective, theta, 0, 0));
  for (int it = 1; it <= config.max_iterations; ++it) {
    const ParamVector lookahead = theta + config.momentum * velocity;
    velocity = config.momentum * velocity -
               config.learning_rate * objective.gradient(lookahead, slots, rng);
    theta += velocity;
    traj.records.push_back(record(objective, theta, it, static_cast<int>(slots.size())));
  }
  traj.final_params = theta;
  return traj;
}

Trajectory optimize(const Objective& objective, const ParamVector& init, Strategy strategy,
                    const OptimizerConfig& config, Rng& rng) {
  switch (strategy) {
    case Strategy::SgdBaseline: return sgd_optimize(objective, init, config, rng);
    case Strategy::NesterovBaseline: return nesterov_optimize(objective, init, config, rng);
    default: return path_optimize(objective, init, strategy, config, rng);
  }
}

}  // namespace qpath
