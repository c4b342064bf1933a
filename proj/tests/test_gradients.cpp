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

#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qpath/gradients.hpp"
#include "random_instances.hpp"

using namespace qpath;

namespace {

// Central difference computed entirely with the dense oracle.
double oracle_derivative(const Circuit& c, const Hamiltonian& h, ParamVector p, int slot) {
  const double step = 1e-5;
  const oracle::Mat hm = oracle::hamiltonian(h);
  p(slot) += step;
  const double up = oracle::expect(oracle::run(c, p), hm);
  p(slot) -= 2 * step;
  const double down = oracle::expect(oracle::run(c, p), hm);
  return (up - down) / (2 * step);
}

}  // namespace

TEST_CASE("shift rule tables") {
  for (GateKind k : {GateKind::Rx, GateKind::Ry, GateKind::Rz}) {
    const auto& r = shift_rule(k);
    REQUIRE(r.size() == 2);
    CHECK(r[0].shift == doctest::Approx(std::numbers::pi / 2));
    CHECK(r[0].coefficient == doctest::Approx(0.5));
    CHECK(r[1].coefficient == doctest::Approx(-0.5));
  }
  for (GateKind k : {GateKind::CRy, GateKind::CRz}) {
    const auto& r = shift_rule(k);
    REQUIRE(r.size() == 4);
    const double s2 = std::sqrt(2.0);
    CHECK(r[0].coefficient == doctest::Approx((s2 + 1) / (4 * s2)));
    CHECK(r[2].shift == doctest::Approx(3 * std::numbers::pi / 2));
    CHECK(r[2].coefficient == doctest::Approx(-(s2 - 1) / (4 * s2)));
    double odd = 0;  // the rule annihilates constants
    for (const auto& t : r) odd += t.coefficient;
    CHECK(std::abs(odd) < 1e-15);
  }
  for (GateKind k : {GateKind::X, GateKind::H, GateKind::CNOT}) {
    CHECK_THROWS_AS(shift_rule(k), std::invalid_argument);
  }
}

TEST_CASE("single-qubit rotation derivative is analytic") {
  Circuit c(1);
  c.add_parameterized(GateKind::Ry, {0});
  const Hamiltonian z{1, {{1.0, {{0, Pauli::Z}}}}};
  for (double theta : {0.0, 0.4, 2.0, -1.3}) {
    ParamVector p(1);
    p(0) = theta;
    const std::vector<int> slots{0};
    CHECK(gradient(c, z, p, slots)(0) == doctest::Approx(-std::sin(theta)).epsilon(1e-12));
  }
}

TEST_CASE("controlled rotations match finite differences") {
  for (GateKind kind : {GateKind::CRy, GateKind::CRz}) {
    Circuit c(2);
    c.add(GateKind::H, {0});
    c.add_parameterized(GateKind::Rx, {1});
    c.add_parameterized(kind, {0, 1});
    c.add(GateKind::H, {1});
    const Hamiltonian h{2, {{1.0, {{1, Pauli::Z}}}, {0.5, {{0, Pauli::X}, {1, Pauli::Y}}}}};
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      const ParamVector p = instances::random_params(2, rng);
      const auto g = gradient(c, h, p, all_slots(c));
      for (int s = 0; s < 2; ++s) {
        CHECK(std::abs(g(s) - finite_difference(c, h, p, s, 1e-5)) < 1e-8);
        CHECK(std::abs(g(s) - oracle_derivative(c, h, p, s)) < 1e-8);
      }
    }
  }
}

TEST_CASE("random circuits with shared slots") {
  Rng rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = instances::random_circuit(3, 14, rng);
    const Hamiltonian h = instances::random_hamiltonian(3, 4, rng);
    const ParamVector p = instances::random_params(c.n_params(), rng);
    const auto g = gradient(c, h, p, all_slots(c));
    for (int s = 0; s < c.n_params(); ++s) {
      CHECK(std::abs(g(s) - oracle_derivative(c, h, p, s)) < 1e-7);
    }
  }
}

TEST_CASE("gradient over a subset of slots keeps the requested order") {
  Rng rng(4);
  const Circuit c = build_vqe_ansatz(3, 1);
  const Hamiltonian h = instances::random_hamiltonian(3, 3, rng);
  const ParamVector p = instances::random_params(c.n_params(), rng);
  const auto full = gradient(c, h, p, all_slots(c));
  const std::vector<int> subset{4, 0, 2};
  const auto part = gradient(c, h, p, subset);
  REQUIRE(part.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(part(i) == doctest::Approx(full(subset[i])).epsilon(1e-14));
  const std::vector<int> bad{c.n_params()};
  CHECK_THROWS_AS(gradient(c, h, p, bad), std::out_of_range);
}

TEST_CASE("shifted evaluation only moves the chosen gate") {
  Circuit c(1);
  c.add(GateKind::Ry, {0}, 0);
  c.add(GateKind::Ry, {0}, 0);
  ParamVector p(1);
  p(0) = 0.3;
  // second gate shifted by 0.5: total rotation 0.3 + 0.8
  const StateVector s = evaluate_shifted(c, p, StateVector(1), 1, 0.5);
  CHECK(s.amplitudes()(0).real() == doctest::Approx(std::cos(1.1 / 2)));
  Circuit fixed(1);
  fixed.add(GateKind::H, {0});
  CHECK_THROWS_AS(evaluate_shifted(fixed, ParamVector(), StateVector(1), 0, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(evaluate_shifted(c, ParamVector(2), StateVector(1), 0, 0.1),
                  std::invalid_argument);
}

TEST_CASE("custom observables") {
  Circuit c(2);
  c.add_parameterized(GateKind::Ry, {0});
  c.add(GateKind::CNOT, {0, 1});
  ParamVector p(1);
  p(0) = 0.9;
  // probability of |11> = sin^2(theta/2); derivative sin(theta)/2
  const StateFunctional prob11 = [](const StateVector& s) { return std::norm(s.amplitudes()(3)); };
  const std::vector<int> slots{0};
  const auto g = shift_gradient(c, p, slots, StateVector(2), prob11);
  CHECK(g(0) == doctest::Approx(std::sin(0.9) / 2).epsilon(1e-12));
}

TEST_CASE("shot-estimated gradients") {
  Circuit c(1);
  c.add_parameterized(GateKind::Ry, {0});
  const Hamiltonian z{1, {{1.0, {{0, Pauli::Z}}}}};
  ParamVector p(1);
  p(0) = 0.7;
  const std::vector<int> slots{0};
  Rng rng(77);
  double mean = 0;
  const int reps = 2000, shots = 100;
  for (int i = 0; i < reps; ++i) mean += gradient_nshot(c, z, p, slots, shots, rng)(0);
  mean /= reps;
  // each shifted estimate has variance (1 - <Z>^2) / shots <= 1 / shots
  CHECK(std::abs(mean + std::sin(0.7)) < 4 * std::sqrt(0.5 / shots / reps));
  CHECK_THROWS_AS(gradient_nshot(c, z, p, slots, 0, rng), std::invalid_argument);
}

TEST_CASE("finite difference argument checks") {
  Circuit c(1);
  c.add_parameterized(GateKind::Rx, {0});
  const Hamiltonian z{1, {{1.0, {{0, Pauli::Z}}}}};
  CHECK_THROWS_AS(finite_difference(c, z, ParamVector::Zero(1), 0, 0.0), std::invalid_argument);
}
