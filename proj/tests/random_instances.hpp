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

// Random circuits, parameters and Pauli Hamiltonians for property tests.

#pragma once

#include <numbers>
#include <random>

#include "qpath/circuit.hpp"

namespace instances {

using namespace qpath;

inline const GateKind kKinds[] = {GateKind::X,  GateKind::H,    GateKind::Rx,  GateKind::Ry,
                                  GateKind::Rz, GateKind::CNOT, GateKind::CRy, GateKind::CRz};

// Every gate kind appears at least once; the rest are drawn uniformly. About
// one in five parameterized gates reuses an existing slot.
inline Circuit random_circuit(int n, int n_gates, Rng& rng) {
  std::uniform_int_distribution<int> kind_pick(0, 7), qubit(0, n - 1), coin(0, 4);
  Circuit c(n);
  for (int i = 0; i < n_gates; ++i) {
    const GateKind kind = i < 8 ? kKinds[i] : kKinds[kind_pick(rng)];
    std::vector<int> qs{qubit(rng)};
    if (is_two_qubit(kind)) {
      int t = qubit(rng);
      while (t == qs[0]) t = qubit(rng);
      qs.push_back(t);
    }
    if (!is_parameterized(kind)) {
      c.add(kind, qs);
    } else if (c.n_params() > 0 && coin(rng) == 0) {
      std::uniform_int_distribution<int> slot(0, c.n_params() - 1);
      c.add(kind, qs, slot(rng));
    } else {
      c.add_parameterized(kind, qs);
    }
  }
  return c;
}

inline ParamVector random_params(int n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  ParamVector p(n);
  for (auto& x : p) x = u(rng);
  return p;
}

inline PauliTerm random_term(int n, Rng& rng, int max_weight) {
  std::uniform_int_distribution<int> qubit(0, n - 1), letter(0, 2), weight(1, max_weight);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  const Pauli letters[] = {Pauli::X, Pauli::Y, Pauli::Z};
  PauliTerm t{coeff(rng), {}};
  const int w = weight(rng);
  while (static_cast<int>(t.operators.size()) < w) t.operators[qubit(rng)] = letters[letter(rng)];
  return t;
}

inline Hamiltonian random_hamiltonian(int n, int n_terms, Rng& rng) {
  Hamiltonian h{n, {}};
  for (int i = 0; i < n_terms; ++i) h.terms.push_back(random_term(n, rng, n));
  return h;
}

}  // namespace instances
