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

#include <span>
#include <vector>

namespace pqnn {

[[nodiscard]] double sigmoid(double z) noexcept;

/// Single-layer perceptron without bias: y = sigmoid(w0*x0 + w1*x1).
[[nodiscard]] double ann2_forward(std::span<const double> params, std::span<const double> features);

/**
 * One hidden layer of two sigmoid units, no biases.
 * params = (w00, w01, w10, w11, v0, v1) with h_j = sigmoid(w_j0*x0 + w_j1*x1)
 * and y = sigmoid(v0*h0 + v1*h1).
 */
[[nodiscard]] double ann6_forward(std::span<const double> params, std::span<const double> features);

/// dy/dparams by backpropagation; returns y.
double ann2_backward(std::span<const double> params, std::span<const double> features,
                     std::span<double> grad_out);
double ann6_backward(std::span<const double> params, std::span<const double> features,
                     std::span<double> grad_out);

} // namespace pqnn
