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

#include "qpath/circuit.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qpath {

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  frontier_.assign(n_qubits, 0);
}

void Circuit::check_gate(const GateInstance& gate) const {
  const std::size_t arity = is_two_qubit(gate.kind) ? 2 : 1;
  if (gate.qubits.size() != arity) {
    throw std::invalid_argument(to_string(gate.kind) + " expects " +
                                std::to_string(arity) + " qubit(s)");
  }
  for (int q : gate.qubits) {
    if (q < 0 || q >= n_qubits_) {
      throw std::out_of_range("gate qubit " + std::to_string(q) + " out of range");
    }
  }
  if (arity == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument("two-qubit gate needs distinct qubits");
  }
  if (is_parameterized(gate.kind) != gate.param_slot.has_value()) {
    throw std::invalid_argument(to_string(gate.kind) +
                                (gate.param_slot ? " takes no parameter" : " needs a parameter slot"));
  }
  if (gate.param_slot && *gate.param_slot < 0) {
    throw std::invalid_argument("negative parameter slot");
  }
}

void Circuit::push_back(GateInstance gate) {
  check_gate(gate);
  for (int q : gate.qubits) {
    if (gate.moment < frontier_[q]) {
      throw std::invalid_argument("gate moment " + std::to_string(gate.moment) +
                                  " collides on qubit " + std::to_string(q));
    }
  }
  for (int q : gate.qubits) frontier_[q] = gate.moment + 1;
  if (gate.param_slot) n_params_ = std::max(n_params_, *gate.param_slot + 1);
  gates_.push_back(std::move(gate));
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits) {
  GateInstance g{kind, std::move(qubits), std::nullopt, 0};
  check_gate(g);
  for (int q : g.qubits) g.moment = std::max(g.moment, frontier_[q]);
  push_back(std::move(g));
  return *this;
}

Circuit& Circuit::add(GateKind kind, std::vector<int> qubits, int slot) {
  GateInstance g{kind, std::move(qubits), slot, 0};
  check_gate(g);
  for (int q : g.qubits) g.moment = std::max(g.moment, frontier_[q]);
  push_back(std::move(g));
  return *this;
}

int Circuit::add_parameterized(GateKind kind, std::vector<int> qubits) {
  const int slot = n_params_;
  add(kind, std::move(qubits), slot);
  return slot;
}

std::vector<int> Circuit::schedule() const {
  std::vector<int> order(gates_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return gates_[a].moment < gates_[b].moment; });
  return order;
}

void Circuit::validate() const {
  std::vector<int> last(n_qubits_, -1);
  std::vector<bool> used(n_params_, false);
  for (const auto& g : gates_) {
    check_gate(g);
    for (int q : g.qubits) {
      if (g.moment <= last[q]) throw std::invalid_argument("moments not increasing on a qubit");
      last[q] = g.moment;
    }
    if (g.param_slot) used[*g.param_slot] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw std::invalid_argument("circuit declares an unused parameter slot");
  }
}

StateVector evaluate(const Circuit& circuit, const ParamVector& params,
                     const StateVector& initial) {
  if (initial.n_qubits() != circuit.n_qubits()) {
    throw std::invalid_argument("initial state and circuit qubit counts differ");
  }
  if (params.size() != circuit.n_params()) {
    throw std::invalid_argument("expected " + std::to_string(circuit.n_params()) +
                                " parameters, got " + std::to_string(params.size()));
  }
  StateVector state = initial;
  for (int idx : circuit.schedule()) apply_gate_inplace(state, circuit.gates()[idx], params);
  return state;
}

StateVector evaluate(const Circuit& circuit, const ParamVector& params) {
  return evaluate(circuit, params, StateVector(circuit.n_qubits()));
}

Circuit build_vqe_ansatz(int n_qubits, int layers) {
  if (n_qubits < 2) throw std::invalid_argument("VQE ansatz needs at least 2 qubits");
  if (layers < 1) throw std::invalid_argument("VQE ansatz needs at least 1 layer");
  Circuit c(n_qubits);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n_qubits; ++q) c.add_parameterized(GateKind::Ry, {q});
    for (int start : {0, 1}) {
      for (int q = start; q + 1 < n_qubits; q += 2) c.add_parameterized(GateKind::CRy, {q, q + 1});
    }
  }
  return c;
}

Circuit build_vqc_ansatz(int n_qubits, int layers) {
  if (n_qubits < 2) throw std::invalid_argument("VQC ansatz needs at least 2 qubits");
  if (layers < 1) throw std::invalid_argument("VQC ansatz needs at least 1 layer");
  Circuit c(n_qubits);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n_qubits; ++q) {
      c.add_parameterized(GateKind::Ry, {q});
      c.add_parameterized(GateKind::Rz, {q});
    }
    // A 2-qubit ring has a single distinct pair.
    const int n_pairs = n_qubits == 2 ? 1 : n_qubits;
    for (int q = 0; q < n_pairs; ++q) {
      c.add_parameterized(GateKind::CRy, {q, (q + 1) % n_qubits});
    }
  }
  return c;
}

Circuit encode_basis(std::span<const int> bits) {
  if (bits.empty()) throw std::invalid_argument("empty bit vector");
  Circuit c(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("bits must be 0 or 1");
    if (bits[i] == 1) c.add(GateKind::X, {static_cast<int>(i)});
  }
  return c;
}

void write_circuit(std::ostream& out, const Circuit& circuit) {
  out << "qubits " << circuit.n_qubits() << " params " << circuit.n_params() << '\n';
  for (const auto& g : circuit.gates()) {
    out << g.moment << ' ' << to_string(g.kind) << ' ';
    for (std::size_t i = 0; i < g.qubits.size(); ++i) out << (i ? "," : "") << g.qubits[i];
    out << ' ';
    if (g.param_slot) {
      out << *g.param_slot;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream os;
  write_circuit(os, circuit);
  return os.str();
}

Circuit read_circuit(std::istream& in) {
  std::string line;
  int n_qubits = -1;
  int n_params = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream hs(line);
    std::string kq, kp;
    if (!(hs >> kq >> n_qubits >> kp >> n_params) || kq != "qubits" || kp != "params") {
      throw std::invalid_argument("bad circuit header: " + line);
    }
    break;
  }
  if (n_qubits < 0) throw std::invalid_argument("missing circuit header");
  Circuit c(n_qubits);
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    GateInstance g;
    std::string kind, qubits, slot;
    if (!(ls >> g.moment >> kind >> qubits >> slot)) {
      throw std::invalid_argument("malformed gate on line " + std::to_string(line_no));
    }
    g.kind = gate_kind_from_string(kind);
    std::istringstream qs(qubits);
    for (std::string tok; std::getline(qs, tok, ',');) g.qubits.push_back(std::stoi(tok));
    if (slot != "-") g.param_slot = std::stoi(slot);
    c.push_back(std::move(g));
  }
  if (c.n_params() != n_params) throw std::invalid_argument("parameter count does not match header");
  c.validate();
  return c;
}

}  // namespace qpath
