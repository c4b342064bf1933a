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

#include "qpath/gradients.hpp"
#include "qpath/optimizers.hpp"
#include "qpath/unitary_metric.hpp"
#include "random_instances.hpp"

using namespace qpath;

namespace {

// Two independent 2-qubit blocks: (0,1) and (2,3).
Circuit split_circuit() {
  Circuit c(4);
  for (int q = 0; q < 4; ++q) c.add_parameterized(GateKind::Ry, {q});
  c.add_parameterized(GateKind::CRy, {0, 1});
  c.add_parameterized(GateKind::CRy, {2, 3});
  return c;
}

Hamiltonian z_on(int n, int q, double coeff = 1.0) {
  return {n, {{coeff, {{q, Pauli::Z}}}}};
}

OptimizerConfig config(int iterations, double lr = 0.1) {
  OptimizerConfig c;
  c.max_iterations = iterations;
  c.learning_rate = lr;
  return c;
}

}  // namespace

TEST_CASE("strategy names") {
  for (Strategy s : {Strategy::RandomPath, Strategy::ShortestPath, Strategy::CombinedPaths,
                     Strategy::SgdBaseline, Strategy::NesterovBaseline}) {
    CHECK(strategy_from_string(to_string(s)) == s);
  }
  CHECK(strategy_from_string("shortest") == Strategy::ShortestPath);
  CHECK(strategy_from_string("nesterov") == Strategy::NesterovBaseline);
  CHECK_THROWS_AS(strategy_from_string("adam"), std::invalid_argument);
  CHECK(is_path_strategy(Strategy::CombinedPaths));
  CHECK_FALSE(is_path_strategy(Strategy::SgdBaseline));
}

TEST_CASE("config validation") {
  OptimizerConfig c;
  CHECK_NOTHROW(c.validate());
  c.learning_rate = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = OptimizerConfig{};
  c.max_iterations = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = OptimizerConfig{};
  c.momentum = 1.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = OptimizerConfig{};
  c.n_shots = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("objective construction checks") {
  CHECK_THROWS_AS(HamiltonianObjective(split_circuit(), z_on(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(HamiltonianObjective(split_circuit(), z_on(4, 0), 0), std::invalid_argument);
  const HamiltonianObjective obj(split_circuit(), {4, {{1.0, {{0, Pauli::Z}, {3, Pauli::X}}}, {2.0, {}}}});
  const auto terms = obj.term_qubits();
  REQUIRE(terms.size() == 2);
  CHECK(terms[0] == std::vector<int>{0, 3});
  CHECK(terms[1].empty());
  CHECK_FALSE(obj.accuracy(ParamVector::Zero(6)).has_value());
}

TEST_CASE("trajectory bookkeeping") {
  const Circuit c = split_circuit();
  const Hamiltonian h = z_on(4, 1);
  Rng init_rng(1);
  const ParamVector init = instances::random_params(c.n_params(), init_rng);
  for (Strategy s : {Strategy::RandomPath, Strategy::ShortestPath, Strategy::CombinedPaths,
                     Strategy::SgdBaseline, Strategy::NesterovBaseline}) {
    Rng rng(3);
    const Trajectory t = optimize(HamiltonianObjective(c, h), init, s, config(7), rng);
    REQUIRE(t.records.size() == 8);
    CHECK(t.records[0].iteration == 0);
    CHECK(t.records[0].updates == 0);
    CHECK(t.records[0].objective == doctest::Approx(expectation(evaluate(c, init), h)));
    CHECK(t.records[7].objective == doctest::Approx(expectation(evaluate(c, t.final_params), h)));
    for (int i = 1; i <= 7; ++i) {
      CHECK(t.records[i].iteration == i);
      CHECK(t.records[i].updates > 0);
    }
    CHECK(t.fallbacks == 0);
  }
  Rng rng(0);
  CHECK_THROWS_AS(path_optimize(HamiltonianObjective(c, h), init, Strategy::SgdBaseline, config(1), rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(sgd_optimize(c, h, ParamVector::Zero(2), config(1), rng), std::invalid_argument);
}

TEST_CASE("path strategies never touch parameters outside the measured cone") {
  const Circuit c = split_circuit();
  const Hamiltonian h = z_on(4, 1);  // cone of q1: slots 0, 1, 4
  Rng init_rng(2);
  const ParamVector init = instances::random_params(c.n_params(), init_rng);
  for (Strategy s : {Strategy::RandomPath, Strategy::ShortestPath}) {
    Rng rng(5);
    const Trajectory t = path_optimize(c, h, init, s, config(10), rng);
    for (int slot : {2, 3, 5}) CHECK(t.final_params(slot) == init(slot));
    for (const auto& r : t.records) CHECK(r.updates <= 3);
  }
}

TEST_CASE("combined paths read out every qubit") {
  const Circuit c = split_circuit();
  const Hamiltonian h = z_on(4, 1);
  Rng init_rng(2);
  const ParamVector init = instances::random_params(c.n_params(), init_rng);
  Rng rng(5);
  const Trajectory t = path_optimize(c, h, init, Strategy::CombinedPaths, config(3), rng);
  // paths from q2 and q3 carry slots 2, 3, 5, whose gradient is zero here
  for (const auto& r : t.records) {
    if (r.iteration > 0) CHECK(r.updates > 3);
  }
  for (int slot : {2, 3, 5}) CHECK(t.final_params(slot) == doctest::Approx(init(slot)));
}

TEST_CASE("a single-path step equals a restricted gradient step") {
  // A chain of single-qubit rotations has exactly one path.
  Circuit c(1);
  c.add_parameterized(GateKind::Rx, {0});
  c.add_parameterized(GateKind::Ry, {0});
  const Hamiltonian h = z_on(1, 0, 1.5);
  ParamVector init(2);
  init << 0.4, -1.1;
  const std::vector<int> slots{0, 1};
  const auto g = gradient(c, h, init, slots);
  for (Strategy s : {Strategy::RandomPath, Strategy::ShortestPath, Strategy::CombinedPaths}) {
    Rng rng(9);
    const Trajectory t = path_optimize(c, h, init, s, config(1, 0.3), rng);
    CHECK(t.final_params(0) == doctest::Approx(init(0) - 0.3 * g(0)));
    CHECK(t.final_params(1) == doctest::Approx(init(1) - 0.3 * g(1)));
    CHECK(t.records[1].updates == 2);
  }
}

TEST_CASE("term groups are updated one after another") {
  // Two terms on the same single-qubit chain: the second step sees the first.
  Circuit c(1);
  c.add_parameterized(GateKind::Ry, {0});
  const Hamiltonian h{1, {{1.0, {{0, Pauli::Z}}}, {0.5, {{0, Pauli::X}}}}};
  ParamVector init(1);
  init << 0.8;
  const std::vector<int> slot{0};
  ParamVector expected = init;
  for (int k = 0; k < 2; ++k) expected(0) -= 0.1 * gradient(c, h, expected, slot)(0);
  Rng rng(0);
  const Trajectory t = path_optimize(c, h, init, Strategy::RandomPath, config(1), rng);
  CHECK(t.final_params(0) == doctest::Approx(expected(0)).epsilon(1e-13));
  CHECK(t.records[1].updates == 2);
}

TEST_CASE("each selected path gets its own step") {
  // Z0 Z1 on two unentangled qubits: one path per qubit, applied in order.
  Circuit c(2);
  c.add_parameterized(GateKind::Ry, {0});
  c.add_parameterized(GateKind::Ry, {1});
  const Hamiltonian h{2, {{1.0, {{0, Pauli::Z}, {1, Pauli::Z}}}}};
  ParamVector init(2);
  init << 0.6, 1.9;
  ParamVector expected = init;
  for (int slot : {0, 1}) {
    const std::vector<int> one{slot};
    expected(slot) -= 0.1 * gradient(c, h, expected, one)(0);
  }
  Rng rng(0);
  const Trajectory t = path_optimize(c, h, init, Strategy::RandomPath, config(1), rng);
  CHECK(t.final_params(0) == doctest::Approx(expected(0)).epsilon(1e-13));
  CHECK(t.final_params(1) == doctest::Approx(expected(1)).epsilon(1e-13));
  CHECK(t.records[1].updates == 2);
}

TEST_CASE("constant terms are skipped") {
  Circuit c(1);
  c.add_parameterized(GateKind::Ry, {0});
  const Hamiltonian h{1, {{3.0, {}}, {1.0, {{0, Pauli::Z}}}}};
  Rng rng(0);
  const Trajectory t = path_optimize(c, h, ParamVector::Constant(1, 0.5), Strategy::RandomPath,
                                     config(1), rng);
  CHECK(t.records[1].updates == 1);
}

TEST_CASE("SGD step") {
  Rng rng(4);
  const Circuit c = build_vqe_ansatz(3, 1);
  const Hamiltonian h = instances::random_hamiltonian(3, 3, rng);
  const ParamVector init = instances::random_params(c.n_params(), rng);
  const ParamVector expected = init - 0.05 * gradient(c, h, init, all_slots(c));
  const Trajectory t = sgd_optimize(c, h, init, config(1, 0.05), rng);
  CHECK((t.final_params - expected).norm() < 1e-13);
  CHECK(t.records[1].updates == c.n_params());
}

TEST_CASE("Nesterov steps use the look-ahead gradient") {
  Rng rng(6);
  const Circuit c = build_vqe_ansatz(3, 1);
  const Hamiltonian h = instances::random_hamiltonian(3, 3, rng);
  const ParamVector init = instances::random_params(c.n_params(), rng);
  const auto all = all_slots(c);
  OptimizerConfig cfg = config(2, 0.05);
  cfg.momentum = 0.9;
  ParamVector theta = init, v = ParamVector::Zero(init.size());
  for (int k = 0; k < 2; ++k) {
    v = 0.9 * v - 0.05 * gradient(c, h, ParamVector(theta + 0.9 * v), all);
    theta += v;
  }
  const Trajectory t = nesterov_optimize(HamiltonianObjective(c, h), init, cfg, rng);
  CHECK((t.final_params - theta).norm() < 1e-13);
}

TEST_CASE("same seed, same trajectory") {
  const Circuit c = build_vqe_ansatz(4, 1);
  Rng hr(2);
  const Hamiltonian h = instances::random_hamiltonian(4, 5, hr);
  const ParamVector init = instances::random_params(c.n_params(), hr);
  for (Strategy s : {Strategy::RandomPath, Strategy::ShortestPath, Strategy::CombinedPaths}) {
    Rng a(42), b(42);
    const Trajectory ta = path_optimize(c, h, init, s, config(5), a);
    const Trajectory tb = path_optimize(c, h, init, s, config(5), b);
    CHECK(ta.final_params == tb.final_params);
  }
}

TEST_CASE("shot-estimated path optimization runs and is seeded") {
  const Circuit c = build_vqe_ansatz(2, 1);
  const Hamiltonian h{2, {{1.0, {{0, Pauli::Z}, {1, Pauli::Z}}}}};
  OptimizerConfig cfg = config(3);
  cfg.n_shots = 20;
  Rng a(1), b(1);
  const ParamVector init = ParamVector::Constant(c.n_params(), 0.3);
  const Trajectory ta = path_optimize(c, h, init, Strategy::RandomPath, cfg, a);
  const Trajectory tb = path_optimize(c, h, init, Strategy::RandomPath, cfg, b);
  CHECK(ta.final_params == tb.final_params);
  CHECK(ta.final_params != init);
}

TEST_CASE("shortest selection falls back on disconnected cones") {
  Circuit c(2);
  c.add_parameterized(GateKind::CRy, {0, 1});
  CircuitGraph g = build_topology(c);
  for (int e = 0; e < static_cast<int>(g.edges().size()); ++e) g.set_weight(e, kInfinity);
  const CircuitGraph cone = causal_cone(g, {1});
  Rng rng(0);
  int fallbacks = 0;
  const Path p = select_path(cone, {1, 1}, Strategy::ShortestPath, rng, fallbacks);
  CHECK(fallbacks == 1);
  CHECK(p.nodes.back() == GraphNode{1, 1});
  CHECK(p.slots == std::vector<int>{0});
  select_path(cone, {1, 1}, Strategy::RandomPath, rng, fallbacks);
  CHECK(fallbacks == 1);
}

TEST_CASE("shortest selection picks among per-start optima") {
  Circuit c(2);
  c.add_parameterized(GateKind::CRy, {0, 1});
  const CircuitGraph g = build_graph(c, ParamVector::Constant(1, 1.0));
  const CircuitGraph cone = causal_cone(g, {1});
  Rng rng(3);
  int fallbacks = 0;
  std::set<GraphNode> starts;
  for (int i = 0; i < 50; ++i) {
    starts.insert(select_path(cone, {1, 1}, Strategy::ShortestPath, rng, fallbacks).nodes.front());
  }
  CHECK(starts == std::set<GraphNode>{{0, 0}, {1, 0}});
  CHECK(fallbacks == 0);
}
