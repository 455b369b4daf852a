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
#include <vector>

#include "pqnn/data/dataset.hpp"
#include "pqnn/models/model.hpp"

namespace pqnn {

/// Mean BCE over the rows `indices` on the model's backend. Row i of the
/// batch draws shots from derive_seed(seed, i).
[[nodiscard]] double batch_loss(const ModelSpec &model, const Dataset &data,
                                std::span<const std::size_t> indices, std::uint64_t seed);

struct LossGradient {
    double loss = 0.0;
    std::vector<double> gradient;
};

/**
 * Mean BCE over a batch and its parameter gradient. ANN kinds use
 * backpropagation. QNN kinds use the parameter-shift rule on every weighted
 * rotation gate; on sampled backends each shifted circuit is sampled
 * separately, so the estimate carries shot noise.
 */
[[nodiscard]] LossGradient loss_gradient(const ModelSpec &model, const Dataset &data,
                                         std::span<const std::size_t> indices,
                                         std::uint64_t seed);

struct Evaluation {
    double loss = 0.0;
    double accuracy = 0.0;
};

/// Mean loss and accuracy over the whole dataset. With `exact` the backend is
/// ignored and noise-free predictions are used.
[[nodiscard]] Evaluation evaluate(const ModelSpec &model, const Dataset &data, bool exact,
                                  std::uint64_t seed = 0);

} // namespace pqnn
