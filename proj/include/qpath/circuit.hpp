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

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpath/statevector.hpp"

namespace qpath {

struct GateInstance {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;
  std::optional<int> param_slot;
  int moment = 0;

  friend bool operator==(const GateInstance&, const GateInstance&) = default;
};

/// Ordered gate sequence with parameter slots.
///
/// Gates are kept sorted by (moment, insertion order). Moments are assigned
/// by as-soon-as-possible scheduling when gates are appended with add().
class Circuit {
 public:
  explicit Circuit(int n_qubits = 0);

  /// Appends a fixed gate at the earliest moment its qubits are free.
  Circuit& add(GateKind kind, std::vector<int> qubits);

  /// Appends a parameterized gate bound to `slot`.
  Circuit& add(GateKind kind, std::vector<int> qubits, int slot);

  /// Appends a parameterized gate bound to a fresh slot; returns the slot.
  int add_parameterized(GateKind kind, std::vector<int> qubits);

  /// Appends a gate with an explicit moment (used when parsing dumps).
  void push_back(GateInstance gate);

  int n_qubits() const { return n_qubits_; }
  int n_params() const { return n_params_; }
  const std::vector<GateInstance>& gates() const { return gates_; }

  /// Gate indices in application order: moment, then sequence order.
  std::vector<int> schedule() const;

  /// Checks every structural invariant; throws std::invalid_argument.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  void check_gate(const GateInstance& gate) const;

  int n_qubits_ = 0;
  int n_params_ = 0;
  std::vector<GateInstance> gates_;
  std::vector<int> frontier_;
};

/// U(params) |initial>.
StateVector evaluate(const Circuit& circuit, const ParamVector& params,
                     const StateVector& initial);

/// U(params) |0...0>.
StateVector evaluate(const Circuit& circuit, const ParamVector& params);

/// Per layer: Ry on every qubit, then CRy on (0,1),(2,3),... followed by
/// (1,2),(3,4),... Each gate owns a fresh slot.
Circuit build_vqe_ansatz(int n_qubits, int layers);

/// Per layer: Ry then Rz on every qubit, then CRy on the ring pairs
/// (i, i+1 mod n). Each gate owns a fresh slot.
Circuit build_vqc_ansatz(int n_qubits, int layers);

/// X on every qubit whose bit is 1.
Circuit encode_basis(std::span<const int> bits);

/// Line-oriented dump: a header `qubits N params P` followed by one gate per
/// line as `moment kind q[,q] slot`, with `-` for gates without a slot.
void write_circuit(std::ostream& out, const Circuit& circuit);
std::string to_text(const Circuit& circuit);
Circuit read_circuit(std::istream& in);

}  // namespace qpath
