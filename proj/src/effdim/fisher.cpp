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

#include "pqnn/effdim/fisher.hpp"

#include <random>

#include "pqnn/error.hpp"
#include "pqnn/kernels/fisher_kernels.hpp"

namespace pqnn {

std::vector<std::array<double, 2>> uniform_inputs(int count, std::uint64_t seed) {
    if (count < 0) {
        throw ArgumentError("input count must be >= 0");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::array<double, 2>> xs(static_cast<std::size_t>(count));
    for (auto &x : xs) {
        x[0] = u(rng);
        x[1] = u(rng);
    }
    return xs;
}

std::vector<std::array<double, 2>> dataset_inputs(const Dataset &data, int count,
                                                  std::uint64_t seed) {
    if (count < 0) {
        throw ArgumentError("input count must be >= 0");
    }
    if (data.empty()) {
        throw ArgumentError("cannot draw inputs from an empty dataset");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, data.size() - 1);
    std::vector<std::array<double, 2>> xs(static_cast<std::size_t>(count));
    for (auto &x : xs) {
        x = data.rows[pick(rng)].features();
    }
    return xs;
}

FisherEstimate fisher_at(ModelKind kind, std::span<const double> theta,
                         std::span<const std::array<double, 2>> inputs, double encoding_scale) {
    const int d = parameter_count(kind);
    if (static_cast<int>(theta.size()) != d) {
        throw ArgumentError("theta has the wrong length for " + to_string(kind));
    }
    const kernels::ProbabilityGradient model = [&](const std::array<double, 2> &x,
                                                   std::span<double> grad) {
        return predict_exact_with_gradient(kind, theta, x, encoding_scale, grad);
    };
    return {std::vector<double>(theta.begin(), theta.end()),
            kernels::binary_fisher(model, d, inputs)};
}

FisherEstimate fisher_at(ModelKind kind, std::span<const double> theta, int n_data,
                         std::uint64_t seed, double encoding_scale) {
    const auto xs = uniform_inputs(n_data, seed);
    return fisher_at(kind, theta, xs, encoding_scale);
}

} // namespace pqnn
