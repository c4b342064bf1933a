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

#include "qpath/unitary_metric.hpp"

#include <algorithm>
#include <array>

namespace qpath {

namespace {

int bit_position(Leg leg) { return 3 - static_cast<int>(leg); }

double information_to_distance(double info, double scale) {
  if (info < kZeroInformation) return kInfinity;
  // Clamp the round-off above the theoretical maximum so saturated legs land
  // exactly on 0 rather than a tiny negative number.
  return std::max(0.0, -std::log(info / scale));
}

}  // namespace

bool LegPair::is_straight() const {
  auto [lo, hi] = std::minmax(first, second);
  return (lo == Leg::a && hi == Leg::c) || (lo == Leg::b && hi == Leg::d);
}

bool LegPair::is_diagonal() const {
  auto [lo, hi] = std::minmax(first, second);
  return (lo == Leg::a && hi == Leg::d) || (lo == Leg::b && hi == Leg::c);
}

EmbeddedState embed_unitary(const UnitaryMatrix4& u) {
  if ((u.adjoint() * u - UnitaryMatrix4::Identity()).norm() > 1e-8) {
    throw std::invalid_argument("embed_unitary: matrix is not unitary");
  }
  EmbeddedState state;
  state.normalization = u.norm();
  // Amplitude on |a,b,c,d> is <c,d|U|a,b>: row (c,d), column (a,b).
  for (int ab = 0; ab < 4; ++ab) {
    for (int cd = 0; cd < 4; ++cd) {
      state.amplitudes(ab * 4 + cd) = u(cd, ab) / state.normalization;
    }
  }
  return state;
}

DensityMatrix reduce(const EmbeddedState& state, std::vector<Leg> keep) {
  std::sort(keep.begin(), keep.end());
  if (keep.empty() || keep.size() > 2 ||
      std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("reduce: keep 1 or 2 distinct legs");
  }
  std::vector<Leg> env;
  for (Leg l : {Leg::a, Leg::b, Leg::c, Leg::d}) {
    if (std::find(keep.begin(), keep.end(), l) == keep.end()) env.push_back(l);
  }
  auto compose = [](const std::vector<Leg>& legs, int value) {
    int index = 0;
    const int k = static_cast<int>(legs.size());
    for (int i = 0; i < k; ++i) {
      if ((value >> (k - 1 - i)) & 1) index |= 1 << bit_position(legs[i]);
    }
    return index;
  };
  const int dk = 1 << keep.size();
  const int de = 1 << env.size();
  DensityMatrix rho = DensityMatrix::Zero(dk, dk);
  for (int i = 0; i < dk; ++i) {
    for (int j = 0; j < dk; ++j) {
      std::complex<double> acc = 0.0;
      for (int e = 0; e < de; ++e) {
        const int envidx = compose(env, e);
        acc += state.amplitudes(compose(keep, i) | envidx) *
               std::conj(state.amplitudes(compose(keep, j) | envidx));
      }
      rho(i, j) = acc;
    }
  }
  return rho;
}

double mutual_information(const EmbeddedState& state, const std::vector<Leg>& lhs,
                          const std::vector<Leg>& rhs) {
  if (lhs.empty() || rhs.empty()) throw std::invalid_argument("mutual_information: empty subsystem");
  for (Leg l : lhs) {
    if (std::find(rhs.begin(), rhs.end(), l) != rhs.end()) {
      throw std::invalid_argument("mutual_information: subsystems overlap");
    }
  }
  std::vector<Leg> joint = lhs;
  joint.insert(joint.end(), rhs.begin(), rhs.end());
  // The embedded state is pure, so the joint entropy equals the entropy of
  // the complement; for a full cover that is zero.
  double joint_entropy = 0.0;
  if (joint.size() < 4) {
    if (joint.size() <= 2) {
      joint_entropy = entropy(reduce(state, joint));
    } else {
      std::vector<Leg> rest;
      for (Leg l : {Leg::a, Leg::b, Leg::c, Leg::d}) {
        if (std::find(joint.begin(), joint.end(), l) == joint.end()) rest.push_back(l);
      }
      joint_entropy = entropy(reduce(state, rest));
    }
  }
  const double info = entropy(reduce(state, lhs)) + entropy(reduce(state, rhs)) - joint_entropy;
  return std::max(0.0, info);
}

double distance_original(const EmbeddedState& state, LegPair pair) {
  if (pair.first == pair.second) throw std::invalid_argument("distance needs two distinct legs");
  return information_to_distance(mutual_information(state, {pair.first}, {pair.second}),
                                 2.0 * kLog2);
}

double distance_modified(const EmbeddedState& state, LegPair pair) {
  if (pair.is_straight()) {
    return information_to_distance(mutual_information(state, {pair.first}, {pair.second}),
                                   4.0 * kLog2);
  }
  if (pair.is_diagonal()) {
    return information_to_distance(
        mutual_information(state, {Leg::a, Leg::c}, {Leg::b, Leg::d}), 4.0 * kLog2);
  }
  throw std::invalid_argument("distance_modified: pair must join an input leg to an output leg");
}

std::array<double, 4> leg_distances(const UnitaryMatrix4& u) {
  const EmbeddedState s = embed_unitary(u);
  const double diagonal = distance_modified(s, kDiagonalAD);
  return {distance_modified(s, kStraightAC), distance_modified(s, kStraightBD), diagonal, diagonal};
}

}  // namespace qpath
