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

#include <vector>

#include "qpath/circuit.hpp"
#include "qpath/optimizers.hpp"

namespace qpath {

/// rows x cols grid with open boundaries; site (r, c) is qubit r * cols + c.
struct LatticeSpec {
  int rows = 2;
  int cols = 3;
  double jx = 1.0;
  double jy = 1.0;
  double jz = -20.0;
  double h = 0.0;

  int n_qubits() const { return rows * cols; }
};

/// sum over grid edges of (-Jx XX - Jy YY - Jz ZZ) - h sum_k Z_k. Terms are
/// emitted edge by edge (XX, YY, ZZ), horizontal edges before vertical ones,
/// then the field terms when h != 0.
Hamiltonian build_xxz(const LatticeSpec& spec);

/// Nearest-neighbour pairs of the grid, horizontal first.
std::vector<std::pair<int, int>> grid_edges(int rows, int cols);

enum class EigenMethod { Auto, Dense, Lanczos };

/// Smallest eigenvalue of `ham`. Auto uses a dense solver up to 10 qubits and
/// matrix-free Lanczos above; more than 14 qubits is rejected.
double exact_ground_energy(const Hamiltonian& ham, EigenMethod method = EigenMethod::Auto);

struct ParitySample {
  std::vector<int> bits;
  int label = 0;  // 1 iff the number of ones is odd
};

struct ParityDataset {
  int n_bits = 0;
  std::vector<ParitySample> samples;
};

/// All 2^n bit vectors in lexicographic order (bit 0 most significant).
ParityDataset parity_dataset(int n_bits);

/// +1 for label 0, -1 for label 1.
inline double mapped_label(int label) { return 1.0 - 2.0 * label; }

/// <Z_0> after encode_basis(bits) followed by `model`, from |0...0>.
double vqc_predict(const Circuit& model, const ParamVector& params, std::span<const int> bits);

/// Mean of (mapped_label - prediction)^2 over the dataset.
double vqc_loss(const Circuit& model, const ParamVector& params, const ParityDataset& data);

/// Fraction of samples whose predicted class matches; a prediction >= 0 is
/// class 0.
double vqc_accuracy(const Circuit& model, const ParamVector& params, const ParityDataset& data);

/// Square loss of a basis-encoded classifier read out on qubit 0. Each sample
/// is one objective term measured on qubit 0.
class VqcObjective : public Objective {
 public:
  VqcObjective(Circuit model, ParityDataset data);

  const Circuit& circuit() const override { return model_; }
  const ParityDataset& dataset() const { return data_; }
  double value(const ParamVector& params) const override;
  Eigen::VectorXd gradient(const ParamVector& params, std::span<const int> slots,
                           Rng& rng) const override;
  std::vector<std::vector<int>> term_qubits() const override;
  std::optional<double> accuracy(const ParamVector& params) const override;

 private:
  Circuit model_;
  ParityDataset data_;
  std::vector<StateVector> inputs_;
};

}  // namespace qpath
