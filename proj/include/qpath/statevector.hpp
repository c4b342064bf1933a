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

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qpath {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;
using ParamVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

enum class GateKind { X, H, Rx, Ry, Rz, CNOT, CRy, CRz };

struct GateInstance;

/// Dense statevector over n qubits.
///
/// Qubit 0 is the most significant bit of the basis-state index, so the
/// amplitude of |q0 q1 ... q_{n-1}> lives at index sum_q q_k 2^(n-1-k).
class StateVector {
 public:
  StateVector() = default;

  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(int n_qubits);

  /// Takes ownership of `amplitudes`; throws if the length is not 2^n_qubits.
  StateVector(int n_qubits, Amplitudes amplitudes);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Amplitudes& amplitudes() { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  int n_qubits_ = 0;
  Amplitudes amplitudes_;
};

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

/// coefficient * P_{q1} P_{q2} ...; an empty operator map is the identity.
struct PauliTerm {
  double coefficient = 1.0;
  std::map<int, Pauli> operators;

  std::vector<int> qubits() const;
  std::string to_string() const;
};

struct Hamiltonian {
  int n_qubits = 0;
  std::vector<PauliTerm> terms;

  /// Throws if any term touches a qubit outside [0, n_qubits).
  void validate() const;
};

/// Bit position of `qubit` inside a basis index for an n-qubit register.
inline int bit_of(int n_qubits, int qubit) { return n_qubits - 1 - qubit; }

/// The gate's unitary on its own qubits, in the basis |q_first q_second>.
Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle);
Eigen::Matrix4cd two_qubit_matrix(GateKind kind, double angle);

bool is_two_qubit(GateKind kind);
bool is_parameterized(GateKind kind);
std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

/// Applies `gate` in place. Throws std::out_of_range for bad qubit indices and
/// std::invalid_argument for a missing parameter.
void apply_gate_inplace(StateVector& state, const GateInstance& gate,
                        const ParamVector& params);

StateVector apply_gate(StateVector state, const GateInstance& gate,
                       const ParamVector& params);

/// <psi| P |psi> for the bare Pauli string (coefficient not applied).
double pauli_expectation(const StateVector& state, const PauliTerm& term);

/// coefficient * <psi| P |psi>.
double expectation(const StateVector& state, const PauliTerm& term);

/// sum_j c_j <psi| P_j |psi>.
double expectation(const StateVector& state, const Hamiltonian& ham);

/// n-shot estimate of `term`: n Bernoulli draws with success probability
/// (1 + <P>) / 2, returned as coefficient * (2 * successes / n - 1).
double sample_expectation(const StateVector& state, const PauliTerm& term,
                          int n_shots, Rng& rng);

/// P |psi> for the bare Pauli string.
Amplitudes apply_pauli(const Amplitudes& psi, int n_qubits, const PauliTerm& term);

/// H |psi>, matrix-free.
Amplitudes apply_hamiltonian(const Hamiltonian& ham, const Amplitudes& psi);

/// Dense 2^n x 2^n matrix of the Hamiltonian.
Eigen::MatrixXcd hamiltonian_matrix(const Hamiltonian& ham);

}  // namespace qpath
