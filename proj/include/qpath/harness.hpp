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

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpath/optimizers.hpp"
#include "qpath/problems.hpp"

namespace qpath {

inline constexpr const char* kVersion = "0.1.0";

/// Exact header of every results CSV.
inline constexpr const char* kCsvHeader = "experiment,strategy,seed,iteration,objective,accuracy,updates";

enum class ExperimentKind { Vqe, Vqc };

std::string to_string(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Vqe;
  LatticeSpec lattice;  // vqe
  int bits = 4;         // vqc
  int layers = 1;
  std::vector<Strategy> strategies;
  double learning_rate = 0.1;
  int iterations = 100;  // epochs for vqc
  double momentum = 0.9;
  int n_seeds = 5;
  std::uint64_t base_seed = 0;
  std::optional<int> n_shots;
  std::string output;  // CSV path; the manifest goes next to it
  int workers = 1;

  void validate() const;
};

void to_json(nlohmann::json& j, const ExperimentConfig& config);
void from_json(const nlohmann::json& j, ExperimentConfig& config);

struct RunResult {
  Strategy strategy = Strategy::RandomPath;
  std::uint64_t seed = 0;
  Trajectory trajectory;
  double wall_seconds = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RunResult> runs;  // ordered by (strategy, seed)
};

/// Uniform [0, 2 pi) initial parameters drawn from `seed`.
ParamVector initial_parameters(int n_params, std::uint64_t seed);

/// The objective a config describes.
std::unique_ptr<Objective> make_objective(const ExperimentConfig& config);

/// Runs every (strategy, seed) pair; seed = base_seed + seed index. Writes
/// the CSV and manifest when `config.output` is set.
ExperimentResult run_experiment(const ExperimentConfig& config);

void write_csv(std::ostream& out, const ExperimentResult& result);
nlohmann::json manifest(const ExperimentResult& result);

/// Manifest path for a CSV path: foo.csv -> foo.manifest.json.
std::string manifest_path(const std::string& csv_path);

struct Stats {
  int count = 0;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double std = 0.0;  // population standard deviation
};

struct SummaryRow {
  std::string experiment;
  std::string strategy;
  int iteration = 0;
  Stats objective;
  std::optional<Stats> accuracy;
};

/// Per (experiment, strategy, iteration) statistics across seeds, in order of
/// first appearance of each (experiment, strategy) and ascending iteration.
/// Throws std::runtime_error on malformed input.
std::vector<SummaryRow> summarize(std::istream& csv);
std::vector<SummaryRow> summarize_file(const std::string& path);
void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows);

}  // namespace qpath
