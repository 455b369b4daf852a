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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pqnn/core/circuit.hpp"
#include "pqnn/photonic/sampler.hpp"

namespace pqnn {

enum class ModelKind { QNN2, QNN6, ANN2, ANN6 };

struct ExactBackend {
    friend bool operator==(const ExactBackend &, const ExactBackend &) = default;
};

/// Statevector readout estimated from `shots` samples. `depolarizing` is a
/// generic gate-noise knob: a global depolarizing channel after every gate.
struct SampledBackend {
    long shots = 100000;
    double depolarizing = 0.0;
    friend bool operator==(const SampledBackend &, const SampledBackend &) = default;
};

/// Dual-rail photonic sampler; `shots` counts accepted (postselected) shots.
struct PhotonicBackend {
    NoiseParams noise = NoiseParams::ascella();
    long shots = 100000;
    friend bool operator==(const PhotonicBackend &, const PhotonicBackend &) = default;
};

using Backend = std::variant<ExactBackend, SampledBackend, PhotonicBackend>;

[[nodiscard]] std::string backend_name(const Backend &backend);
/// 0 for the exact backend.
[[nodiscard]] long backend_shots(const Backend &backend);

struct ModelSpec {
    ModelKind kind = ModelKind::QNN2;
    std::vector<double> params;
    Backend backend = ExactBackend{};
    double encoding_scale = kDefaultEncodingScale;

    /// Throws ConfigError on parameter-count or backend/kind mismatch.
    void validate() const;
};

[[nodiscard]] bool is_quantum(ModelKind kind) noexcept;
[[nodiscard]] int parameter_count(ModelKind kind) noexcept;
[[nodiscard]] std::string to_string(ModelKind kind);
[[nodiscard]] ModelKind model_kind_from_string(const std::string &name);

/// Gate circuit of a QNN kind; throws ConfigError for ANN kinds.
[[nodiscard]] ParameterizedCircuit circuit_for(ModelKind kind,
                                               double encoding_scale = kDefaultEncodingScale);

/// P(class B) for one feature pair on the model's backend.
[[nodiscard]] double predict(const ModelSpec &model, std::span<const double> features,
                             std::uint64_t rng_seed = 0);

/// P(class B) of a QNN model's circuit for already-bound per-gate angles.
[[nodiscard]] double predict_bound(const ModelSpec &model, const ParameterizedCircuit &circuit,
                                   std::span<const double> angles, std::uint64_t rng_seed = 0);

/// Noise-free P(class B), ignoring the configured backend.
[[nodiscard]] double predict_exact(ModelKind kind, std::span<const double> params,
                                   std::span<const double> features,
                                   double encoding_scale = kDefaultEncodingScale);

/**
 * Noise-free prediction and its parameter gradient: backpropagation for ANN
 * kinds, the two-term parameter-shift rule for QNN kinds.
 */
double predict_exact_with_gradient(ModelKind kind, std::span<const double> params,
                                   std::span<const double> features, double encoding_scale,
                                   std::span<double> grad_out);

enum class Label { A = 0, B = 1 };

/// Label B iff predict >= threshold.
[[nodiscard]] Label decision(const ModelSpec &model, std::span<const double> features,
                             double threshold = 0.5, std::uint64_t rng_seed = 0);
[[nodiscard]] Label decision_from_probability(double p, double threshold = 0.5) noexcept;

void to_json(nlohmann::json &j, const Backend &b);
void from_json(const nlohmann::json &j, Backend &b);
void to_json(nlohmann::json &j, const ModelSpec &m);
void from_json(const nlohmann::json &j, ModelSpec &m);

} // namespace pqnn
