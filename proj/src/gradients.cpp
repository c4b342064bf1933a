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

#include "qpath/gradients.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qpath {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-i theta P / 2): generator eigenvalues +-1/2.
const ShiftRule kTwoTerm{{kPi / 2, 0.5}, {-kPi / 2, -0.5}};

// Controlled rotations: generator eigenvalues {0, +-1/2}.
const double kC1 = (std::numbers::sqrt2 + 1) / (4 * std::numbers::sqrt2);
const double kC2 = (std::numbers::sqrt2 - 1) / (4 * std::numbers::sqrt2);
const ShiftRule kFourTerm{
    {kPi / 2, kC1}, {-kPi / 2, -kC1}, {3 * kPi / 2, -kC2}, {-3 * kPi / 2, kC2}};

void check_slots(const Circuit& circuit, std::span<const int> slots) {
  for (int s : slots) {
    if (s < 0 || s >= circuit.n_params()) {
      throw std::out_of_range("parameter slot " + std::to_string(s) + " out of range");
    }
  }
}

}  // namespace

const ShiftRule& shift_rule(GateKind kind) {
  switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
      return kTwoTerm;
    case GateKind::CRy:
    case GateKind::CRz:
      return kFourTerm;
    default:
      throw std::invalid_argument("no shift rule registered for " + to_string(kind));
  }
}

std::vector<int> all_slots(const Circuit& circuit) {
  std::vector<int> slots(circuit.n_params());
  std::iota(slots.begin(), slots.end(), 0);
  return slots;
}

StateVector evaluate_shifted(const Circuit& circuit, const ParamVector& params,
                             const StateVector& initial, int gate_index, double offset) {
  if (params.size() != circuit.n_params()) {
    throw std::invalid_argument("parameter vector length does not match circuit");
  }
  const GateInstance& target = circuit.gates().at(gate_index);
  if (!target.param_slot) throw std::invalid_argument("shifted gate has no parameter");

  // The shifted gate reads an extra trailing slot so other gates sharing its
  // parameter keep the unshifted value.
  ParamVector extended(params.size() + 1);
  extended.head(params.size()) = params;
  extended(params.size()) = params(*target.param_slot) + offset;
  GateInstance shifted = target;
  shifted.param_slot = static_cast<int>(params.size());

  StateVector state = initial;
  for (int gi : circuit.schedule()) {
    apply_gate_inplace(state, gi == gate_index ? shifted : circuit.gates()[gi], extended);
  }
  return state;
}

Eigen::VectorXd shift_gradient(const Circuit& circuit, const ParamVector& params,
                               std::span<const int> slots, const StateVector& initial,
                               const StateFunctional& observable) {
  check_slots(circuit, slots);
  std::vector<std::vector<int>> gates_of(circuit.n_params());
  for (int gi = 0; gi < static_cast<int>(circuit.gates().size()); ++gi) {
    const auto& g = circuit.gates()[gi];
    if (g.param_slot) gates_of[*g.param_slot].push_back(gi);
  }
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(slots.size()));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    double acc = 0.0;
    for (int gi : gates_of[slots[i]]) {
      for (const auto& [shift, coeff] : shift_rule(circuit.gates()[gi].kind)) {
        acc += coeff * observable(evaluate_shifted(circuit, params, initial, gi, shift));
      }
    }
    grad(static_cast<Eigen::Index>(i)) = acc;
  }
  return grad;
}

Eigen::VectorXd gradient(const Circuit& circuit, const Hamiltonian& ham,
                         const ParamVector& params, std::span<const int> slots) {
  return shift_gradient(circuit, params, slots, StateVector(circuit.n_qubits()),
                        [&](const StateVector& s) { return expectation(s, ham); });
}

Eigen::VectorXd gradient_nshot(const Circuit& circuit, const Hamiltonian& ham,
                               const ParamVector& params, std::span<const int> slots,
                               int n_shots, Rng& rng) {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be at least 1");
  return shift_gradient(circuit, params, slots, StateVector(circuit.n_qubits()),
                        [&](const StateVector& s) {
                          double total = 0.0;
                          for (const auto& term : ham.terms) {
                            total += sample_expectation(s, term, n_shots, rng);
                          }
                          return total;
                        });
}

double finite_difference(const Circuit& circuit, const Hamiltonian& ham,
                         const ParamVector& params, int slot, double step) {
  if (step <= 0) throw std::invalid_argument("finite-difference step must be positive");
  ParamVector plus = params;
  ParamVector minus = params;
  plus(slot) += step;
  minus(slot) -= step;
  return (expectation(evaluate(circuit, plus), ham) - expectation(evaluate(circuit, minus), ham)) /
         (2 * step);
}

}  // namespace qpath
