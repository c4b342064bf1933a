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

#include "qpath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qpath {

using nlohmann::json;

std::string to_string(ExperimentKind kind) { return kind == ExperimentKind::Vqe ? "vqe" : "vqc"; }

void ExperimentConfig::validate() const {
  if (strategies.empty()) throw std::invalid_argument("at least one strategy is required");
  if (n_seeds < 1) throw std::invalid_argument("n_seeds must be at least 1");
  if (layers < 1) throw std::invalid_argument("layers must be at least 1");
  if (iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (!(learning_rate > 0)) throw std::invalid_argument("learning rate must be positive");
  if (!(momentum >= 0 && momentum < 1)) throw std::invalid_argument("momentum must lie in [0, 1)");
  if (n_shots && *n_shots < 1) throw std::invalid_argument("n_shots must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (kind == ExperimentKind::Vqe) {
    if (lattice.rows < 1 || lattice.cols < 1 || lattice.n_qubits() < 2) {
      throw std::invalid_argument("lattice needs at least 2 sites");
    }
    if (lattice.n_qubits() > 14) throw std::invalid_argument("lattice exceeds 14 qubits");
  } else {
    if (bits < 2 || bits > 10) throw std::invalid_argument("vqc needs 2..10 bits");
    if (n_shots) throw std::invalid_argument("n_shots is only supported for vqe");
  }
}

void to_json(json& j, const ExperimentConfig& c) {
  std::vector<std::string> strategies;
  for (Strategy s : c.strategies) strategies.push_back(to_string(s));
  j = json{{"experiment", to_string(c.kind)},
           {"lattice",
            {{"rows", c.lattice.rows},
             {"cols", c.lattice.cols},
             {"jx", c.lattice.jx},
             {"jy", c.lattice.jy},
             {"jz", c.lattice.jz},
             {"h", c.lattice.h}}},
           {"bits", c.bits},
           {"layers", c.layers},
           {"strategies", strategies},
           {"learning_rate", c.learning_rate},
           {"iterations", c.iterations},
           {"momentum", c.momentum},
           {"n_seeds", c.n_seeds},
           {"base_seed", c.base_seed},
           {"n_shots", c.n_shots ? json(*c.n_shots) : json(nullptr)},
           {"output", c.output},
           {"workers", c.workers}};
}

void from_json(const json& j, ExperimentConfig& c) {
  if (j.contains("experiment")) {
    const auto kind = j.at("experiment").get<std::string>();
    if (kind == "vqe") {
      c.kind = ExperimentKind::Vqe;
    } else if (kind == "vqc") {
      c.kind = ExperimentKind::Vqc;
    } else {
      throw std::invalid_argument("unknown experiment '" + kind + "'");
    }
  }
  if (j.contains("lattice")) {
    const auto& l = j.at("lattice");
    c.lattice.rows = l.value("rows", c.lattice.rows);
    c.lattice.cols = l.value("cols", c.lattice.cols);
    c.lattice.jx = l.value("jx", c.lattice.jx);
    c.lattice.jy = l.value("jy", c.lattice.jy);
    c.lattice.jz = l.value("jz", c.lattice.jz);
    c.lattice.h = l.value("h", c.lattice.h);
  }
  c.bits = j.value("bits", c.bits);
  c.layers = j.value("layers", c.layers);
  if (j.contains("strategies")) {
    c.strategies.clear();
    for (const auto& s : j.at("strategies")) c.strategies.push_back(strategy_from_string(s.get<std::string>()));
  }
  c.learning_rate = j.value("learning_rate", c.learning_rate);
  c.iterations = j.value("iterations", c.iterations);
  c.momentum = j.value("momentum", c.momentum);
  c.n_seeds = j.value("n_seeds", c.n_seeds);
  c.base_seed = j.value("base_seed", c.base_seed);
  if (j.contains("n_shots")) {
    c.n_shots = j.at("n_shots").is_null() ? std::nullopt : std::optional<int>(j.at("n_shots").get<int>());
  }
  c.output = j.value("output", c.output);
  c.workers = j.value("workers", c.workers);
}

ParamVector initial_parameters(int n_params, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  ParamVector p(n_params);
  for (int i = 0; i < n_params; ++i) p(i) = angle(rng);
  return p;
}

std::unique_ptr<Objective> make_objective(const ExperimentConfig& config) {
  if (config.kind == ExperimentKind::Vqe) {
    return std::make_unique<HamiltonianObjective>(
        build_vqe_ansatz(config.lattice.n_qubits(), config.layers), build_xxz(config.lattice),
        config.n_shots);
  }
  return std::make_unique<VqcObjective>(build_vqc_ansatz(config.bits, config.layers),
                                        parity_dataset(config.bits));
}

std::string manifest_path(const std::string& csv_path) {
  const auto dot = csv_path.rfind('.');
  const auto slash = csv_path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return csv_path + ".manifest.json";
  }
  return csv_path.substr(0, dot) + ".manifest.json";
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  const auto objective = make_objective(config);

  ExperimentResult result;
  result.config = config;
  for (Strategy s : config.strategies) {
    for (int i = 0; i < config.n_seeds; ++i) {
      RunResult r;
      r.strategy = s;
      r.seed = config.base_seed + static_cast<std::uint64_t>(i);
      result.runs.push_back(r);
    }
  }

  OptimizerConfig opt;
  opt.learning_rate = config.learning_rate;
  opt.max_iterations = config.iterations;
  opt.momentum = config.momentum;
  opt.n_shots = config.n_shots;

  auto execute = [&](RunResult& run) {
    const auto start = std::chrono::steady_clock::now();
    OptimizerConfig local = opt;
    local.seed = run.seed;
    // Initial parameters depend on the seed only, so every strategy starts
    // from the same point for a given seed.
    const ParamVector init = initial_parameters(objective->circuit().n_params(), run.seed);
    std::seed_seq seq{run.seed, std::uint64_t{1}};
    Rng rng(seq);
    run.trajectory = optimize(*objective, init, run.strategy, local, rng);
    run.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };

  const int workers = std::min<int>(config.workers, static_cast<int>(result.runs.size()));
  if (workers <= 1) {
    for (auto& run : result.runs) execute(run);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < result.runs.size(); i = next++) execute(result.runs[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  if (!config.output.empty()) {
    std::ofstream csv(config.output, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + config.output);
    write_csv(csv, result);
    if (!csv) throw std::runtime_error("failed writing " + config.output);
    std::ofstream man(manifest_path(config.output));
    if (!man) throw std::runtime_error("cannot write " + manifest_path(config.output));
    man << manifest(result).dump(2) << '\n';
  }
  return result;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << kCsvHeader << '\n';
  const std::string experiment = to_string(result.config.kind);
  for (const auto& run : result.runs) {
    const std::string strategy = to_string(run.strategy);
    for (const auto& rec : run.trajectory.records) {
      out << experiment << ',' << strategy << ',' << run.seed << ',' << rec.iteration << ','
          << format_double(rec.objective) << ',';
      if (rec.accuracy) out << format_double(*rec.accuracy);
      out << ',' << rec.updates << '\n';
    }
  }
}

json manifest(const ExperimentResult& result) {
  json runs = json::array();
  for (const auto& run : result.runs) {
    runs.push_back({{"strategy", to_string(run.strategy)},
                    {"seed", run.seed},
                    {"wall_seconds", run.wall_seconds},
                    {"fallbacks", run.trajectory.fallbacks},
                    {"final_objective", run.trajectory.records.back().objective}});
  }
  json j{{"software", "qpath"}, {"version", kVersion}, {"config", result.config}, {"runs", runs}};
  if (result.config.kind == ExperimentKind::Vqe && result.config.lattice.n_qubits() <= 14) {
    j["exact_ground_energy"] = exact_ground_energy(build_xxz(result.config.lattice));
  }
  return j;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_number(const std::string& s, int line_no) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
  return v;
}

struct Accumulator {
  std::vector<double> values;

  Stats stats() const {
    Stats s;
    s.count = static_cast<int>(values.size());
    s.min = *std::min_element(values.begin(), values.end());
    s.max = *std::max_element(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / s.count;
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(sq / s.count);
    return s;
  }
};

}  // namespace

std::vector<SummaryRow> summarize(std::istream& csv) {
  std::string line;
  if (!std::getline(csv, line)) throw std::runtime_error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw std::runtime_error("unexpected CSV header: " + line);

  using Key = std::pair<std::string, std::string>;
  std::vector<Key> order;
  std::map<Key, std::map<int, std::pair<Accumulator, Accumulator>>> groups;
  int line_no = 1;
  while (std::getline(csv, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 7) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected 7 fields");
    }
    const Key key{f[0], f[1]};
    if (!groups.count(key)) order.push_back(key);
    const double iteration = parse_number(f[3], line_no);
    if (iteration < 0 || iteration != std::floor(iteration)) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": bad iteration");
    }
    auto& slot = groups[key][static_cast<int>(iteration)];
    slot.first.values.push_back(parse_number(f[4], line_no));
    if (!f[5].empty()) slot.second.values.push_back(parse_number(f[5], line_no));
    parse_number(f[2], line_no);
    parse_number(f[6], line_no);
  }
  if (order.empty()) throw std::runtime_error("CSV has no data rows");

  std::vector<SummaryRow> rows;
  for (const auto& key : order) {
    for (const auto& [iteration, acc] : groups[key]) {
      SummaryRow row;
      row.experiment = key.first;
      row.strategy = key.second;
      row.iteration = iteration;
      row.objective = acc.first.stats();
      if (!acc.second.values.empty()) row.accuracy = acc.second.stats();
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SummaryRow> summarize_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return summarize(in);
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "experiment,strategy,iteration,n,objective_mean,objective_min,objective_max,"
         "objective_std,accuracy_mean,accuracy_min,accuracy_max,accuracy_std\n";
  for (const auto& r : rows) {
    out << r.experiment << ',' << r.strategy << ',' << r.iteration << ',' << r.objective.count
        << ',' << format_double(r.objective.mean) << ',' << format_double(r.objective.min) << ','
        << format_double(r.objective.max) << ',' << format_double(r.objective.std);
    if (r.accuracy) {
      out << ',' << format_double(r.accuracy->mean) << ',' << format_double(r.accuracy->min) << ','
          << format_double(r.accuracy->max) << ',' << format_double(r.accuracy->std);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

}  // namespace qpath
