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

#include "qpath/problems.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qpath/gradients.hpp"

namespace qpath {

std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) edges.emplace_back(r * cols + c, r * cols + c + 1);
  }
  for (int r = 0; r + 1 < rows; ++r) {
    for (int c = 0; c < cols; ++c) edges.emplace_back(r * cols + c, (r + 1) * cols + c);
  }
  return edges;
}

Hamiltonian build_xxz(const LatticeSpec& spec) {
  if (spec.rows < 1 || spec.cols < 1) throw std::invalid_argument("lattice needs rows, cols >= 1");
  Hamiltonian ham;
  ham.n_qubits = spec.n_qubits();
  for (auto [i, j] : grid_edges(spec.rows, spec.cols)) {
    ham.terms.push_back({-spec.jx, {{i, Pauli::X}, {j, Pauli::X}}});
    ham.terms.push_back({-spec.jy, {{i, Pauli::Y}, {j, Pauli::Y}}});
    ham.terms.push_back({-spec.jz, {{i, Pauli::Z}, {j, Pauli::Z}}});
  }
  if (spec.h != 0.0) {
    for (int k = 0; k < ham.n_qubits; ++k) ham.terms.push_back({-spec.h, {{k, Pauli::Z}}});
  }
  return ham;
}

namespace {

double dense_ground_energy(const Hamiltonian& ham) {
  const Eigen::MatrixXcd h = hamiltonian_matrix(ham);
  if (h.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.real(), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

// Lanczos with full reorthogonalization from a fixed pseudo-random start.
double lanczos_ground_energy(const Hamiltonian& ham) {
  const Eigen::Index dim = Eigen::Index{1} << ham.n_qubits;
  const Eigen::Index max_steps = std::min<Eigen::Index>(dim, 400);

  Rng rng(0x5eed);
  std::normal_distribution<double> normal;
  Amplitudes v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(normal(rng), normal(rng));
  v.normalize();

  std::vector<Amplitudes> basis{v};
  std::vector<double> alpha, beta;
  double previous = std::numeric_limits<double>::infinity();
  double estimate = previous;
  for (Eigen::Index k = 0; k < max_steps; ++k) {
    Amplitudes w = apply_hamiltonian(ham, basis.back());
    alpha.push_back(basis.back().dot(w).real());
    for (const auto& b : basis) w -= b.dot(w) * b;
    for (const auto& b : basis) w -= b.dot(w) * b;

    Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), alpha.size());
    Eigen::VectorXd sub = Eigen::Map<Eigen::VectorXd>(beta.data(), beta.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    estimate = tri.eigenvalues()(0);

    const double norm = w.norm();
    if (norm < 1e-12 || std::abs(estimate - previous) < 1e-13 * std::max(1.0, std::abs(estimate))) {
      break;
    }
    previous = estimate;
    beta.push_back(norm);
    basis.push_back(w / norm);
  }
  return estimate;
}

}  // namespace

double exact_ground_energy(const Hamiltonian& ham, EigenMethod method) {
  ham.validate();
  if (ham.n_qubits > 14) throw std::invalid_argument("exact_ground_energy supports at most 14 qubits");
  if (method == EigenMethod::Auto) method = ham.n_qubits <= 10 ? EigenMethod::Dense : EigenMethod::Lanczos;
  return method == EigenMethod::Dense ? dense_ground_energy(ham) : lanczos_ground_energy(ham);
}

ParityDataset parity_dataset(int n_bits) {
  if (n_bits < 1 || n_bits > 10) throw std::invalid_argument("parity dataset needs 1..10 bits");
  ParityDataset data;
  data.n_bits = n_bits;
  for (int x = 0; x < (1 << n_bits); ++x) {
    ParitySample s;
    int ones = 0;
    for (int i = 0; i < n_bits; ++i) {
      const int bit = (x >> (n_bits - 1 - i)) & 1;
      s.bits.push_back(bit);
      ones += bit;
    }
    s.label = ones % 2;
    data.samples.push_back(std::move(s));
  }
  return data;
}

namespace {

const PauliTerm kReadout{1.0, {{0, Pauli::Z}}};

StateVector encoded_input(int n_qubits, std::span<const int> bits) {
  if (static_cast<int>(bits.size()) != n_qubits) {
    throw std::invalid_argument("input has " + std::to_string(bits.size()) + " bits, model has " +
                                std::to_string(n_qubits) + " qubits");
  }
  return evaluate(encode_basis(bits), ParamVector(), StateVector(n_qubits));
}

}  // namespace

double vqc_predict(const Circuit& model, const ParamVector& params, std::span<const int> bits) {
  return expectation(evaluate(model, params, encoded_input(model.n_qubits(), bits)), kReadout);
}

double vqc_loss(const Circuit& model, const ParamVector& params, const ParityDataset& data) {
  if (data.samples.empty()) throw std::invalid_argument("empty dataset");
  double total = 0.0;
  for (const auto& s : data.samples) {
    const double r = mapped_label(s.label) - vqc_predict(model, params, s.bits);
    total += r * r;
  }
  return total / static_cast<double>(data.samples.size());
}

double vqc_accuracy(const Circuit& model, const ParamVector& params, const ParityDataset& data) {
  if (data.samples.empty()) throw std::invalid_argument("empty dataset");
  int correct = 0;
  for (const auto& s : data.samples) {
    const int predicted = vqc_predict(model, params, s.bits) >= 0.0 ? 0 : 1;
    correct += predicted == s.label;
  }
  return static_cast<double>(correct) / static_cast<double>(data.samples.size());
}

VqcObjective::VqcObjective(Circuit model, ParityDataset data)
    : model_(std::move(model)), data_(std::move(data)) {
  if (data_.samples.empty()) throw std::invalid_argument("empty dataset");
  for (const auto& s : data_.samples) inputs_.push_back(encoded_input(model_.n_qubits(), s.bits));
}

double VqcObjective::value(const ParamVector& params) const {
  return vqc_loss(model_, params, data_);
}

Eigen::VectorXd VqcObjective::gradient(const ParamVector& params, std::span<const int> slots,
                                       Rng&) const {
  const auto readout = [](const StateVector& s) { return expectation(s, kReadout); };
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(slots.size()));
  for (std::size_t i = 0; i < data_.samples.size(); ++i) {
    const double prediction = readout(evaluate(model_, params, inputs_[i]));
    const double residual = mapped_label(data_.samples[i].label) - prediction;
    grad += -2.0 * residual * shift_gradient(model_, params, slots, inputs_[i], readout);
  }
  return grad / static_cast<double>(data_.samples.size());
}

std::vector<std::vector<int>> VqcObjective::term_qubits() const {
  return std::vector<std::vector<int>>(data_.samples.size(), std::vector<int>{0});
}

std::optional<double> VqcObjective::accuracy(const ParamVector& params) const {
  return vqc_accuracy(model_, params, data_);
}

}  // namespace qpath
