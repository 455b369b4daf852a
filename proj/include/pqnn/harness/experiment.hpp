// Copyright 2026 The pqnn Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqnn/data/dataset.hpp"
#include "pqnn/effdim/effective_dimension.hpp"
#include "pqnn/harness/csv.hpp"
#include "pqnn/harness/statistics.hpp"
#include "pqnn/training/train.hpp"

namespace pqnn {

enum class ExperimentKind { XorCompare, IrisBatchCompare, ShotSweep, EdTable, Throughput, PlatformCompare };

[[nodiscard]] std::string to_string(ExperimentKind kind);
[[nodiscard]] ExperimentKind experiment_kind_from_string(const std::string &name);

/// Iris CSV shipped with the sources.
[[nodiscard]] std::filesystem::path default_iris_path();

enum class EdInputs { Uniform, Iris };

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::XorCompare;
    std::vector<ModelKind> models;
    TrainConfig train;
    int trials = 10;
    std::uint64_t seed = 1;
    /// Photonic noise for shot_sweep and platform_compare; Ascella when absent.
    std::optional<NoiseParams> noise;
    std::filesystem::path out_dir = "results";
    bool write_files = true;

    std::filesystem::path iris_path = default_iris_path();
    IrisNormalization iris_normalization = IrisNormalization::Max;
    int xor_per_cluster = kXorPerCluster;
    double xor_sigma = kXorSigma;
    std::uint64_t data_seed = 1;

    std::vector<long> shots = {10, 30, 100, 300, 1000, 10000, 100000};
    std::vector<int> batch_sizes = {1, 4};
    long photonic_shots = 100000;
    long gate_noise_shots = 10000;
    double depolarizing = 0.01;

    EDConfig ed;
    EdInputs ed_inputs = EdInputs::Iris;
    std::vector<double> ed_n_grid = {1e3, 3.16227766e3, 1e4, 3.16227766e4, 1e5,
                                     3.16227766e5, 1e6, 3.16227766e6, 1e7};

    void validate() const;
};

/// Defaults for one experiment, matching the corresponding figure.
[[nodiscard]] ExperimentConfig default_config(ExperimentKind kind);

struct SeriesResult {
    std::string name;
    std::vector<int> trials; // trial index of each completed trace
    std::vector<TrainTrace> traces;
    RunStatistics stats;
    long shots = 0;
};

struct ThroughputRow {
    std::string scenario;
    double rate_hz = 0.0;
    std::string detail;
};

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::XorCompare;
    std::vector<SeriesResult> series;
    std::vector<EDRow> ed_rows;
    std::vector<EDRow> ed_curve;
    std::vector<ThroughputRow> throughput;
    std::vector<std::string> warnings;
    std::vector<std::filesystem::path> files;

    [[nodiscard]] const SeriesResult &find(const std::string &name) const;
};

/**
 * Runs `trials` independent training runs per series, trial t seeded with
 * derive_seed(seed, t), concurrently. Failed trials are logged and dropped.
 * Writes `<out_dir>/<experiment>/<series>.csv` and `.svg` plus summaries.
 */
[[nodiscard]] ExperimentReport run_experiment(const ExperimentConfig &config);

/// The trial loop shared by all training experiments.
[[nodiscard]] SeriesResult run_trials(const std::string &name, ModelKind kind, const Dataset &data,
                                      const TrainConfig &base, int trials, std::uint64_t seed,
                                      std::vector<std::string> &warnings);

void to_json(nlohmann::json &j, const ExperimentConfig &c);
void from_json(const nlohmann::json &j, ExperimentConfig &c);
[[nodiscard]] ExperimentConfig load_experiment_config(const std::filesystem::path &path);

/// Final loss/accuracy statistics per series.
[[nodiscard]] nlohmann::json report_summary(const ExperimentReport &report);

} // namespace pqnn
