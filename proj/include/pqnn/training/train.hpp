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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pqnn/data/dataset.hpp"
#include "pqnn/models/model.hpp"
#include "pqnn/training/adam.hpp"
#include "pqnn/training/cobyla.hpp"

namespace pqnn {

using OptimizerConfig = std::variant<CobylaConfig, AdamConfig>;

struct TrainConfig {
    OptimizerConfig optimizer = CobylaConfig{};
    int batch_size = 1;
    /// Optimizer iterations: objective evaluations for COBYLA (its
    /// evaluation budget), parameter updates for Adam.
    int max_iterations = 200;
    Backend backend = ExactBackend{};
    std::uint64_t seed = 1;
    /// Explicit starting parameters; drawn from the seed when absent.
    std::optional<std::vector<double>> init;
    double encoding_scale = kDefaultEncodingScale;
    /// Record trace loss/accuracy with noise-free predictions (default) or
    /// by sampling the training backend.
    bool monitor_on_backend = false;

    /// Throws ConfigError when inconsistent with the model or dataset.
    void validate(ModelKind kind, const Dataset &data) const;
};

struct TrainRecord {
    int iteration = 0;
    double loss = 0.0;
    double accuracy = 0.0;
    std::vector<double> params;
};

struct TrainTrace {
    ModelKind model = ModelKind::QNN2;
    std::string backend;
    long shots = 0;
    int batch_size = 1;
    std::uint64_t seed = 0;
    /// Record 0 is the initial parameters; record k follows iteration k.
    std::vector<TrainRecord> records;

    /// Mean over the last `window` records.
    [[nodiscard]] double converged_loss(int window = 5) const;
    [[nodiscard]] double converged_accuracy(int window = 5) const;
    [[nodiscard]] const std::vector<double> &final_params() const;
};

/// Uniform in [0, 2pi) per QNN weight, uniform in [-1, 1] per ANN weight.
[[nodiscard]] std::vector<double> initial_params(ModelKind kind, std::uint64_t seed);

/**
 * Trains `kind` on `data`. Samples are visited in batches of batch_size
 * drawn from a freshly shuffled order each epoch. With COBYLA every objective
 * call consumes the next batch, so in online mode each evaluation sees one
 * sample. With Adam every update consumes the next batch.
 */
[[nodiscard]] TrainTrace train(ModelKind kind, const Dataset &data, const TrainConfig &config);

void to_json(nlohmann::json &j, const TrainConfig &c);
void from_json(const nlohmann::json &j, TrainConfig &c);

} // namespace pqnn
