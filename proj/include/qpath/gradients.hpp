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

#include <functional>
#include <span>
#include <vector>

#include "qpath/circuit.hpp"

namespace qpath {

struct ShiftTerm {
  double shift;        // radians
  double coefficient;  // gamma
};

/// d<O>/dtheta = sum_k coefficient_k <O>(theta + shift_k).
using ShiftRule = std::vector<ShiftTerm>;

/// Registered rule for `kind`; throws std::invalid_argument when none exists.
const ShiftRule& shift_rule(GateKind kind);

/// Any functional that is linear in |psi><psi| (an expectation value or an
/// unbiased estimate of one).
using StateFunctional = std::function<double(const StateVector&)>;

/// U(params) |initial> with the angle of gate `gate_index` offset by `offset`.
StateVector evaluate_shifted(const Circuit& circuit, const ParamVector& params,
                             const StateVector& initial, int gate_index, double offset);

/// Parameter-shift derivatives of observable(U(params)|initial>) for each
/// slot in `slots`, in the order given. A slot shared by several gates sums
/// the contributions of each gate.
Eigen::VectorXd shift_gradient(const Circuit& circuit, const ParamVector& params,
                               std::span<const int> slots, const StateVector& initial,
                               const StateFunctional& observable);

/// Exact gradient of <H> over `slots`.
Eigen::VectorXd gradient(const Circuit& circuit, const Hamiltonian& ham,
                         const ParamVector& params, std::span<const int> slots);

/// Gradient with every shifted <H_j> replaced by a fresh n-shot estimate.
Eigen::VectorXd gradient_nshot(const Circuit& circuit, const Hamiltonian& ham,
                               const ParamVector& params, std::span<const int> slots,
                               int n_shots, Rng& rng);

/// Central difference (f(theta + step e) - f(theta - step e)) / (2 step).
double finite_difference(const Circuit& circuit, const Hamiltonian& ham,
                         const ParamVector& params, int slot, double step);

/// All slots 0..n_params-1.
std::vector<int> all_slots(const Circuit& circuit);

}  // namespace qpath
