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

// Mutual-information distances between the legs of a two-qubit gate.
//
// A 4x4 unitary U is read as a four-qubit pure state whose amplitude on
// |a,b,c,d> is <c,d|U|a,b> / N. Legs a and b are the inputs on the first
// and second wire, c and d the matching outputs. Reduced density matrices of
// that state give entropies (in nats) and mutual informations, from which the
// leg distances follow.

#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace qpath {

enum class Leg { a = 0, b = 1, c = 2, d = 3 };

using UnitaryMatrix4 = Eigen::Matrix4cd;
using DensityMatrix = Eigen::MatrixXcd;

inline constexpr double kLog2 = std::numbers::ln2;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Mutual information below this is treated as zero (distance +inf).
inline constexpr double kZeroInformation = 1e-12;

/// Eigenvalues above -kEigenClip and below zero are clamped to zero.
inline constexpr double kEigenClip = 1e-12;

struct EmbeddedState {
  /// Amplitudes over |a,b,c,d>, with a the most significant bit.
  Eigen::Matrix<std::complex<double>, 16, 1> amplitudes;
  double normalization = 0.0;
};

/// Ordered pair of distinct legs.
struct LegPair {
  Leg first;
  Leg second;

  bool is_straight() const;
  bool is_diagonal() const;
};

inline constexpr LegPair kStraightAC{Leg::a, Leg::c};
inline constexpr LegPair kStraightBD{Leg::b, Leg::d};
inline constexpr LegPair kDiagonalAD{Leg::a, Leg::d};
inline constexpr LegPair kDiagonalBC{Leg::b, Leg::c};

/// Throws std::invalid_argument when ||U^dagger U - I|| exceeds 1e-8.
EmbeddedState embed_unitary(const UnitaryMatrix4& u);

/// Partial trace keeping `keep` (1 or 2 legs) in ascending leg order.
DensityMatrix reduce(const EmbeddedState& state, std::vector<Leg> keep);

/// Von Neumann entropy -Tr(rho log rho) in nats.
///
/// Accepts any square complex Eigen expression. Throws std::invalid_argument
/// if the input is not Hermitian or not unit-trace within 1e-10.
template <typename Derived>
double entropy(const Eigen::MatrixBase<Derived>& rho) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix m = rho;
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("density matrix must be square");
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - typename Derived::Scalar(1.0)) > 1e-10) {
    throw std::invalid_argument("density matrix trace deviates from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda < -kEigenClip) throw std::invalid_argument("density matrix has a negative eigenvalue");
    if (lambda < kEigenClip) continue;
    s -= lambda * std::log(lambda);
  }
  return s;
}

/// I(A:B) = S(A) + S(B) - S(AB); S(AB) is zero when A and B cover all legs.
double mutual_information(const EmbeddedState& state, const std::vector<Leg>& lhs,
                          const std::vector<Leg>& rhs);

/// -log(I(i:j) / (2 log 2)), +inf when I(i:j) vanishes.
double distance_original(const EmbeddedState& state, LegPair pair);

/// Straight pairs: -log(I(i:j) / (4 log 2)). Diagonal pairs:
/// -log(I(ac:bd) / (4 log 2)). +inf when the information vanishes.
double distance_modified(const EmbeddedState& state, LegPair pair);

/// distance_modified for the four gate legs, in the order
/// (a,c), (b,d), (a,d), (b,c).
std::array<double, 4> leg_distances(const UnitaryMatrix4& u);

}  // namespace qpath
