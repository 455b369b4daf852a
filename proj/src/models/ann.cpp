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

#include "pqnn/models/ann.hpp"

#include <cmath>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {
void check(std::span<const double> params, std::size_t d, std::span<const double> features) {
    if (params.size() != d || features.size() != 2) {
        throw ConfigError("ANN parameter or feature arity mismatch");
    }
}
} // namespace

double sigmoid(double z) noexcept {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double ann2_forward(std::span<const double> params, std::span<const double> features) {
    check(params, 2, features);
    return sigmoid(params[0] * features[0] + params[1] * features[1]);
}

double ann6_forward(std::span<const double> params, std::span<const double> features) {
    check(params, 6, features);
    const double h0 = sigmoid(params[0] * features[0] + params[1] * features[1]);
    const double h1 = sigmoid(params[2] * features[0] + params[3] * features[1]);
    return sigmoid(params[4] * h0 + params[5] * h1);
}

double ann2_backward(std::span<const double> params, std::span<const double> features,
                     std::span<double> grad_out) {
    const double y = ann2_forward(params, features);
    const double dz = y * (1.0 - y);
    grad_out[0] = dz * features[0];
    grad_out[1] = dz * features[1];
    return y;
}

double ann6_backward(std::span<const double> params, std::span<const double> features,
                     std::span<double> grad_out) {
    check(params, 6, features);
    const double h0 = sigmoid(params[0] * features[0] + params[1] * features[1]);
    const double h1 = sigmoid(params[2] * features[0] + params[3] * features[1]);
    const double y = sigmoid(params[4] * h0 + params[5] * h1);
    const double dy = y * (1.0 - y);
    const double dh0 = dy * params[4] * h0 * (1.0 - h0);
    const double dh1 = dy * params[5] * h1 * (1.0 - h1);
    grad_out[0] = dh0 * features[0];
    grad_out[1] = dh0 * features[1];
    grad_out[2] = dh1 * features[0];
    grad_out[3] = dh1 * features[1];
    grad_out[4] = dy * h0;
    grad_out[5] = dy * h1;
    return y;
}

} // namespace pqnn
