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

// qpath command-line driver.
//
//   qpath vqe --rows 2 --cols 3 --layers 1 --strategy shortest,random,sgd --out vqe.csv
//   qpath vqc --bits 4 --layers 2 --strategy random,nesterov --epochs 50 --out vqc.csv
//   qpath graph --ansatz vqe --qubits 6 --layers 1 --dump-dot graph.dot
//   qpath summarize --in vqe.csv

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qpath/circuit_graph.hpp"
#include "qpath/harness.hpp"

namespace {

using qpath::ExperimentConfig;
using qpath::ExperimentKind;

std::vector<qpath::Strategy> parse_strategies(const std::vector<std::string>& names) {
  std::vector<qpath::Strategy> out;
  for (const auto& n : names) out.push_back(qpath::strategy_from_string(n));
  return out;
}

struct ExperimentFlags {
  std::string config_path;
  std::vector<std::string> strategies;
  int layers = 0;
  double lr = 0.0;
  int iterations = 0;
  int seeds = 0;
  std::uint64_t base_seed = 0;
  bool base_seed_set = false;
  double momentum = -1.0;
  int shots = 0;
  int workers = 0;
  std::string out;
};

void add_common(CLI::App* cmd, ExperimentFlags& f, const char* iteration_flag) {
  cmd->add_option("--config", f.config_path, "JSON experiment config; flags override it");
  cmd->add_option("--strategy", f.strategies, "random, shortest, combined, sgd, nesterov")
      ->delimiter(',');
  cmd->add_option("--layers", f.layers, "ansatz layers");
  cmd->add_option("--lr", f.lr, "learning rate");
  cmd->add_option(iteration_flag, f.iterations, "optimizer iterations");
  cmd->add_option("--seeds", f.seeds, "number of seeds");
  cmd->add_option("--base-seed", f.base_seed, "first seed")->each([&](const std::string&) {
    f.base_seed_set = true;
  });
  cmd->add_option("--momentum", f.momentum, "Nesterov momentum");
  cmd->add_option("--workers", f.workers, "parallel runs");
  cmd->add_option("--out", f.out, "results CSV path");
}

ExperimentConfig load_config(const ExperimentFlags& f, ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  if (kind == ExperimentKind::Vqe) {
    c.strategies = {qpath::Strategy::ShortestPath, qpath::Strategy::RandomPath,
                    qpath::Strategy::SgdBaseline};
  } else {
    c.iterations = 50;
    c.layers = 2;
    c.strategies = {qpath::Strategy::RandomPath, qpath::Strategy::ShortestPath,
                    qpath::Strategy::NesterovBaseline};
  }
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) throw std::runtime_error("cannot read " + f.config_path);
    nlohmann::json j = nlohmann::json::parse(in);
    qpath::from_json(j, c);
    if (c.kind != kind) throw std::invalid_argument("config describes a different experiment");
  }
  if (!f.strategies.empty()) c.strategies = parse_strategies(f.strategies);
  if (f.layers) c.layers = f.layers;
  if (f.lr) c.learning_rate = f.lr;
  if (f.iterations) c.iterations = f.iterations;
  if (f.seeds) c.n_seeds = f.seeds;
  if (f.base_seed_set) c.base_seed = f.base_seed;
  if (f.momentum >= 0) c.momentum = f.momentum;
  if (f.shots) c.n_shots = f.shots;
  if (f.workers) c.workers = f.workers;
  if (!f.out.empty()) c.output = f.out;
  return c;
}

void report(const qpath::ExperimentResult& result) {
  for (const auto& run : result.runs) {
    std::cout << qpath::to_string(run.strategy) << " seed " << run.seed << ": final objective "
              << run.trajectory.records.back().objective;
    if (run.trajectory.records.back().accuracy) {
      std::cout << " accuracy " << *run.trajectory.records.back().accuracy;
    }
    if (run.trajectory.fallbacks) std::cout << " fallbacks " << run.trajectory.fallbacks;
    std::cout << " (" << run.wall_seconds << " s)\n";
  }
  if (!result.config.output.empty()) {
    std::cout << "wrote " << result.config.output << " and "
              << qpath::manifest_path(result.config.output) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information-flow paths for variational circuit optimization"};
  app.require_subcommand(1);

  ExperimentFlags vqe_flags;
  int rows = 0, cols = 0;
  double coupling = 0.0, delta = 0.0, field = 0.0;
  bool coupling_set = false, delta_set = false, field_set = false;
  auto* vqe = app.add_subcommand("vqe", "XXZ ground-state search on a rows x cols grid");
  add_common(vqe, vqe_flags, "--iters");
  vqe->add_option("--rows", rows, "lattice rows");
  vqe->add_option("--cols", cols, "lattice columns");
  vqe->add_option("--J", coupling, "XX/YY coupling")->each([&](const std::string&) { coupling_set = true; });
  vqe->add_option("--delta", delta, "ZZ coupling")->each([&](const std::string&) { delta_set = true; });
  vqe->add_option("--field", field, "longitudinal field h")->each([&](const std::string&) { field_set = true; });
  vqe->add_option("--shots", vqe_flags.shots, "n-shot gradient estimates (exact when omitted)");

  ExperimentFlags vqc_flags;
  int bits = 0;
  auto* vqc = app.add_subcommand("vqc", "n-bit parity classifier");
  add_common(vqc, vqc_flags, "--epochs");
  vqc->add_option("--bits", bits, "input bits / qubits");

  std::string dot_path, circuit_in, circuit_out, ansatz = "vqe";
  int qubits = 6, graph_layers = 1;
  std::uint64_t param_seed = 0;
  bool zero_params = false;
  std::vector<int> measure;
  auto* graph = app.add_subcommand("graph", "export the weighted circuit graph");
  graph->add_option("--dump-dot", dot_path, "DOT output path")->required();
  graph->add_option("--circuit", circuit_in, "circuit dump to load instead of an ansatz");
  graph->add_option("--ansatz", ansatz, "vqe or vqc")->check(CLI::IsMember({"vqe", "vqc"}));
  graph->add_option("--qubits", qubits, "ansatz width");
  graph->add_option("--layers", graph_layers, "ansatz layers");
  graph->add_option("--param-seed", param_seed, "seed for uniform [0, 2pi) parameters");
  graph->add_flag("--zero-params", zero_params, "use all-zero parameters");
  graph->add_option("--measure", measure, "restrict to the causal cone of these qubits")->delimiter(',');
  graph->add_option("--dump-circuit", circuit_out, "also write the circuit dump");

  std::string summary_in, summary_out;
  auto* summarize = app.add_subcommand("summarize", "per-iteration statistics across seeds");
  summarize->add_option("--in", summary_in, "results CSV")->required();
  summarize->add_option("--out", summary_out, "summary CSV (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vqe) {
      ExperimentConfig c = load_config(vqe_flags, ExperimentKind::Vqe);
      if (rows) c.lattice.rows = rows;
      if (cols) c.lattice.cols = cols;
      if (coupling_set) c.lattice.jx = c.lattice.jy = coupling;
      if (delta_set) c.lattice.jz = delta;
      if (field_set) c.lattice.h = field;
      report(qpath::run_experiment(c));
    } else if (*vqc) {
      ExperimentConfig c = load_config(vqc_flags, ExperimentKind::Vqc);
      if (bits) c.bits = bits;
      report(qpath::run_experiment(c));
    } else if (*graph) {
      qpath::Circuit circuit;
      if (!circuit_in.empty()) {
        std::ifstream in(circuit_in);
        if (!in) throw std::runtime_error("cannot read " + circuit_in);
        circuit = qpath::read_circuit(in);
      } else if (ansatz == "vqe") {
        circuit = qpath::build_vqe_ansatz(qubits, graph_layers);
      } else {
        circuit = qpath::build_vqc_ansatz(qubits, graph_layers);
      }
      const qpath::ParamVector params =
          zero_params ? qpath::ParamVector::Zero(circuit.n_params())
                      : qpath::initial_parameters(circuit.n_params(), param_seed);
      qpath::CircuitGraph g = qpath::build_graph(circuit, params);
      if (!measure.empty()) g = qpath::causal_cone(g, measure);
      std::ofstream dot(dot_path);
      if (!dot) throw std::runtime_error("cannot write " + dot_path);
      qpath::write_dot(dot, g, circuit);
      if (!circuit_out.empty()) {
        std::ofstream out(circuit_out);
        if (!out) throw std::runtime_error("cannot write " + circuit_out);
        qpath::write_circuit(out, circuit);
      }
      std::cout << "wrote " << dot_path << " (" << g.nodes().size() << " nodes, " << g.edges().size()
                << " edges)\n";
    } else if (*summarize) {
      const auto rows_out = qpath::summarize_file(summary_in);
      if (summary_out.empty()) {
        qpath::write_summary(std::cout, rows_out);
      } else {
        std::ofstream out(summary_out);
        if (!out) throw std::runtime_error("cannot write " + summary_out);
        qpath::write_summary(out, rows_out);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
