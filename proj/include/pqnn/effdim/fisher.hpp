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

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "pqnn/data/dataset.hpp"
#include "pqnn/models/model.hpp"

namespace pqnn {

struct FisherEstimate {
    std::vector<double> theta;
    Eigen::MatrixXd matrix;
};

/// `count` inputs uniform on [0,1]^2.
[[nodiscard]] std::vector<std::array<double, 2>> uniform_inputs(int count, std::uint64_t seed);

/// `count` feature pairs drawn with replacement from the dataset rows.
[[nodiscard]] std::vector<std::array<double, 2>> dataset_inputs(const Dataset &data, int count,
                                                                std::uint64_t seed);

/**
 * Binary-output Fisher information E_x[grad p grad p^T / (p (1 - p))] of a
 * model at theta over the given inputs, with exact gradients (parameter
 * shift for QNNs, backprop for ANNs).
 */
[[nodiscard]] FisherEstimate fisher_at(ModelKind kind, std::span<const double> theta,
                                       std::span<const std::array<double, 2>> inputs,
                                       double encoding_scale = kDefaultEncodingScale);

/// As above with `n_data` uniform inputs drawn from the seed.
[[nodiscard]] FisherEstimate fisher_at(ModelKind kind, std::span<const double> theta, int n_data,
                                       std::uint64_t seed,
                                       double encoding_scale = kDefaultEncodingScale);

} // namespace pqnn
