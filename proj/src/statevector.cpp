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

#include "qpath/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpath/circuit.hpp"

namespace qpath {

namespace {

constexpr Complex kI{0.0, 1.0};

struct PauliMasks {
  std::uint64_t flip = 0;   // X or Y
  std::uint64_t phase = 0;  // Y or Z
  int n_y = 0;
};

PauliMasks masks_of(const PauliTerm& term, int n_qubits) {
  PauliMasks m;
  for (const auto& [q, p] : term.operators) {
    if (q < 0 || q >= n_qubits) {
      throw std::out_of_range("Pauli term qubit " + std::to_string(q) +
                              " outside register of " + std::to_string(n_qubits));
    }
    const std::uint64_t bit = std::uint64_t{1} << bit_of(n_qubits, q);
    if (p != Pauli::Z) m.flip |= bit;
    if (p != Pauli::X) m.phase |= bit;
    if (p == Pauli::Y) ++m.n_y;
  }
  return m;
}

// i^n_y
Complex y_prefactor(int n_y) {
  switch (n_y % 4) {
    case 0: return {1.0, 0.0};
    case 1: return kI;
    case 2: return {-1.0, 0.0};
    default: return -kI;
  }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw std::invalid_argument("unsupported qubit count " + std::to_string(n_qubits));
  }
  amplitudes_ = Amplitudes::Zero(Eigen::Index{1} << n_qubits);
  amplitudes_(0) = 1.0;
}

StateVector::StateVector(int n_qubits, Amplitudes amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (n_qubits < 0 || amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
    throw std::invalid_argument("amplitude count does not match 2^n_qubits");
  }
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amplitudes_(0) = 0.0;
  s.amplitudes_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

std::vector<int> PauliTerm::qubits() const {
  std::vector<int> out;
  out.reserve(operators.size());
  for (const auto& [q, p] : operators) out.push_back(q);
  return out;
}

std::string PauliTerm::to_string() const {
  std::ostringstream os;
  os << coefficient;
  if (operators.empty()) os << " I";
  for (const auto& [q, p] : operators) os << ' ' << static_cast<char>(p) << q;
  return os.str();
}

void Hamiltonian::validate() const {
  for (const auto& term : terms) {
    for (const auto& [q, p] : term.operators) {
      if (q < 0 || q >= n_qubits) {
        throw std::out_of_range("Hamiltonian term touches qubit " + std::to_string(q));
      }
    }
  }
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CRy || kind == GateKind::CRz;
}

bool is_parameterized(GateKind kind) {
  switch (kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::CRy:
    case GateKind::CRz:
      return true;
    default:
      return false;
  }
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::Rx: return "Rx";
    case GateKind::Ry: return "Ry";
    case GateKind::Rz: return "Rz";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CRy: return "CRy";
    case GateKind::CRz: return "CRz";
  }
  throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_string(const std::string& name) {
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::Rx, GateKind::Ry, GateKind::Rz,
                     GateKind::CNOT, GateKind::CRy, GateKind::CRz}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unknown gate kind '" + name + "'");
}

Eigen::Matrix2cd single_qubit_matrix(GateKind kind, double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  Eigen::Matrix2cd m;
  switch (kind) {
    case GateKind::X:
      m << 0, 1, 1, 0;
      break;
    case GateKind::H:
      m << 1, 1, 1, -1;
      m /= std::sqrt(2.0);
      break;
    case GateKind::Rx:
      m << c, -kI * s, -kI * s, c;
      break;
    case GateKind::Ry:
      m << c, -s, s, c;
      break;
    case GateKind::Rz:
      m << std::exp(-kI * (angle / 2)), 0, 0, std::exp(kI * (angle / 2));
      break;
    default:
      throw std::invalid_argument(to_string(kind) + " is not a single-qubit gate");
  }
  return m;
}

Eigen::Matrix4cd two_qubit_matrix(GateKind kind, double angle) {
  Eigen::Matrix2cd target;
  switch (kind) {
    case GateKind::CNOT: target = single_qubit_matrix(GateKind::X, 0.0); break;
    case GateKind::CRy: target = single_qubit_matrix(GateKind::Ry, angle); break;
    case GateKind::CRz: target = single_qubit_matrix(GateKind::Rz, angle); break;
    default:
      throw std::invalid_argument(to_string(kind) + " is not a two-qubit gate");
  }
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m.bottomRightCorner<2, 2>() = target;
  return m;
}

void apply_gate_inplace(StateVector& state, const GateInstance& gate,
                        const ParamVector& params) {
  const int n = state.n_qubits();
  const std::size_t arity = is_two_qubit(gate.kind) ? 2 : 1;
  if (gate.qubits.size() != arity) {
    throw std::invalid_argument(to_string(gate.kind) + " expects " +
                                std::to_string(arity) + " qubit(s)");
  }
  for (int q : gate.qubits) {
    if (q < 0 || q >= n) throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range");
  }
  double angle = 0.0;
  if (is_parameterized(gate.kind)) {
    if (!gate.param_slot || *gate.param_slot < 0 || *gate.param_slot >= params.size()) {
      throw std::invalid_argument("missing parameter for " + to_string(gate.kind));
    }
    angle = params(*gate.param_slot);
  }

  auto& psi = state.amplitudes();
  const auto dim = static_cast<std::uint64_t>(psi.size());

  // Single-qubit kinds act on qubits[0]; controlled kinds act on qubits[1]
  // conditioned on qubits[0] = 1.
  const bool controlled = arity == 2;
  const int target = controlled ? gate.qubits[1] : gate.qubits[0];
  if (controlled && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
  const std::uint64_t tbit = std::uint64_t{1} << bit_of(n, target);
  const std::uint64_t cbit = controlled ? std::uint64_t{1} << bit_of(n, gate.qubits[0]) : 0;

  Eigen::Matrix2cd u;
  switch (gate.kind) {
    case GateKind::CNOT: u = single_qubit_matrix(GateKind::X, 0.0); break;
    case GateKind::CRy: u = single_qubit_matrix(GateKind::Ry, angle); break;
    case GateKind::CRz: u = single_qubit_matrix(GateKind::Rz, angle); break;
    default: u = single_qubit_matrix(gate.kind, angle); break;
  }

  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tbit) != 0 || (i & cbit) != cbit) continue;
    const std::uint64_t j = i | tbit;
    const Complex a0 = psi(static_cast<Eigen::Index>(i));
    const Complex a1 = psi(static_cast<Eigen::Index>(j));
    psi(static_cast<Eigen::Index>(i)) = u(0, 0) * a0 + u(0, 1) * a1;
    psi(static_cast<Eigen::Index>(j)) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

StateVector apply_gate(StateVector state, const GateInstance& gate,
                       const ParamVector& params) {
  apply_gate_inplace(state, gate, params);
  return state;
}

Amplitudes apply_pauli(const Amplitudes& psi, int n_qubits, const PauliTerm& term) {
  const PauliMasks m = masks_of(term, n_qubits);
  const Complex pre = y_prefactor(m.n_y);
  Amplitudes out(psi.size());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(psi.size()); ++i) {
    // P|i> = i^{n_y} (-1)^{popcount(i & phase)} |i ^ flip>
    const double sign = (__builtin_popcountll(i & m.phase) & 1) ? -1.0 : 1.0;
    out(static_cast<Eigen::Index>(i ^ m.flip)) = pre * sign * psi(static_cast<Eigen::Index>(i));
  }
  return out;
}

double pauli_expectation(const StateVector& state, const PauliTerm& term) {
  const PauliMasks m = masks_of(term, state.n_qubits());
  const auto& psi = state.amplitudes();
  Complex acc = 0.0;
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(psi.size()); ++i) {
    const double sign = (__builtin_popcountll(i & m.phase) & 1) ? -1.0 : 1.0;
    acc += std::conj(psi(static_cast<Eigen::Index>(i ^ m.flip))) * sign *
           psi(static_cast<Eigen::Index>(i));
  }
  return (y_prefactor(m.n_y) * acc).real();
}

double expectation(const StateVector& state, const PauliTerm& term) {
  return term.coefficient * pauli_expectation(state, term);
}

double expectation(const StateVector& state, const Hamiltonian& ham) {
  if (ham.n_qubits != state.n_qubits()) {
    throw std::invalid_argument("Hamiltonian and state qubit counts differ");
  }
  double total = 0.0;
  for (const auto& term : ham.terms) total += expectation(state, term);
  return total;
}

double sample_expectation(const StateVector& state, const PauliTerm& term,
                          int n_shots, Rng& rng) {
  if (n_shots < 1) throw std::invalid_argument("n_shots must be at least 1");
  if (term.operators.empty()) return term.coefficient;
  const double p = std::clamp((1.0 + pauli_expectation(state, term)) / 2.0, 0.0, 1.0);
  std::binomial_distribution<long long> draw(n_shots, p);
  const auto successes = static_cast<double>(draw(rng));
  return term.coefficient * (2.0 * successes / n_shots - 1.0);
}

Amplitudes apply_hamiltonian(const Hamiltonian& ham, const Amplitudes& psi) {
  Amplitudes out = Amplitudes::Zero(psi.size());
  for (const auto& term : ham.terms) {
    out += term.coefficient * apply_pauli(psi, ham.n_qubits, term);
  }
  return out;
}

Eigen::MatrixXcd hamiltonian_matrix(const Hamiltonian& ham) {
  ham.validate();
  const Eigen::Index dim = Eigen::Index{1} << ham.n_qubits;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : ham.terms) {
    const PauliMasks m = masks_of(term, ham.n_qubits);
    const Complex pre = term.coefficient * y_prefactor(m.n_y);
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
      const double sign = (__builtin_popcountll(i & m.phase) & 1) ? -1.0 : 1.0;
      h(static_cast<Eigen::Index>(i ^ m.flip), static_cast<Eigen::Index>(i)) += pre * sign;
    }
  }
  return h;
}

}  // namespace qpath
