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

#include "pqnn/training/gradient.hpp"

#include <numbers>
#include <optional>

#include "pqnn/error.hpp"
#include "pqnn/rng.hpp"
#include "pqnn/training/loss.hpp"

namespace pqnn {

namespace {

void check_batch(const Dataset &data, std::span<const std::size_t> indices) {
    if (indices.empty()) {
        throw ArgumentError("empty batch");
    }
    for (const auto i : indices) {
        if (i >= data.size()) {
            throw ArgumentError("batch index out of range");
        }
    }
}

// dp/dw by parameter shift with each evaluation drawn from the backend.
double sampled_shift_gradient(const ModelSpec &model, const ParameterizedCircuit &circuit,
                              std::span<const double> features, std::uint64_t seed,
                              std::span<double> grad_out) {
    auto angles = circuit.bind(features, model.params);
    std::uint64_t stream = 0;
    const double p = predict_bound(model, circuit, angles, derive_seed(seed, stream++));
    constexpr double kShift = std::numbers::pi / 2.0;
    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        const auto &gate = circuit.gates[g];
        if (!gate.slot || gate.slot->source != SlotSource::Weight) {
            continue;
        }
        if (!is_rotation(gate.kind)) {
            throw CapabilityError("parameter shift needs a rotation gate for every weight");
        }
        const double base = angles[g];
        angles[g] = base + kShift;
        const double plus = predict_bound(model, circuit, angles, derive_seed(seed, stream++));
        angles[g] = base - kShift;
        const double minus = predict_bound(model, circuit, angles, derive_seed(seed, stream++));
        angles[g] = base;
        grad_out[static_cast<std::size_t>(gate.slot->index)] += 0.5 * (plus - minus);
    }
    return p;
}

} // namespace

double batch_loss(const ModelSpec &model, const Dataset &data,
                  std::span<const std::size_t> indices, std::uint64_t seed) {
    check_batch(data, indices);
    double sum = 0.0;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto &row = data.rows[indices[i]];
        const auto x = row.features();
        sum += bce_loss(predict(model, x, derive_seed(seed, i)), row.label);
    }
    return sum / static_cast<double>(indices.size());
}

LossGradient loss_gradient(const ModelSpec &model, const Dataset &data,
                           std::span<const std::size_t> indices, std::uint64_t seed) {
    model.validate();
    check_batch(data, indices);
    const auto d = static_cast<std::size_t>(parameter_count(model.kind));
    LossGradient out;
    out.gradient.assign(d, 0.0);
    std::vector<double> dp(d);
    const bool exact =
        !is_quantum(model.kind) || std::holds_alternative<ExactBackend>(model.backend);
    std::optional<ParameterizedCircuit> circuit;
    if (!exact) {
        circuit = circuit_for(model.kind, model.encoding_scale);
    }
    for (std::size_t i = 0; i < indices.size(); ++i) {
        const auto &row = data.rows[indices[i]];
        const auto x = row.features();
        std::fill(dp.begin(), dp.end(), 0.0);
        const double p =
            exact ? predict_exact_with_gradient(model.kind, model.params, x, model.encoding_scale, dp)
                  : sampled_shift_gradient(model, *circuit, x, derive_seed(seed, i), dp);
        out.loss += bce_loss(p, row.label);
        const double dl = bce_derivative(p, row.label);
        for (std::size_t k = 0; k < d; ++k) {
            out.gradient[k] += dl * dp[k];
        }
    }
    const double inv = 1.0 / static_cast<double>(indices.size());
    out.loss *= inv;
    for (auto &g : out.gradient) {
        g *= inv;
    }
    return out;
}

Evaluation evaluate(const ModelSpec &model, const Dataset &data, bool exact, std::uint64_t seed) {
    if (data.empty()) {
        throw ArgumentError("cannot evaluate on an empty dataset");
    }
    Evaluation e;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto &row = data.rows[i];
        const auto x = row.features();
        const double p = exact ? predict_exact(model.kind, model.params, x, model.encoding_scale)
                               : predict(model, x, derive_seed(seed, i));
        e.loss += bce_loss(p, row.label);
        if (static_cast<int>(decision_from_probability(p)) == row.label) {
            ++correct;
        }
    }
    e.loss /= static_cast<double>(data.size());
    e.accuracy = static_cast<double>(correct) / static_cast<double>(data.size());
    return e;
}

} // namespace pqnn
