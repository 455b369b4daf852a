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
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace pqnn::kernels {

/// p(x) and dp/dtheta for one input; writes the gradient into grad_out.
using ProbabilityGradient =
    std::function<double(const std::array<double, 2> &x, std::span<double> grad_out)>;

/// p is clamped to [kFisherClamp, 1 - kFisherClamp] in the denominator.
inline constexpr double kFisherClamp = 1e-9;

/// Mean of grad grad^T / (p (1 - p)) over the inputs, accumulated in order.
[[nodiscard]] Eigen::MatrixXd binary_fisher(const ProbabilityGradient &model, int d,
                                            std::span<const std::array<double, 2>> inputs);

/// Produces the Fisher matrix of parameter sample `index`.
using FisherTask = std::function<Eigen::MatrixXd(std::size_t index)>;

/// Runs tasks 0..count-1 one after another.
[[nodiscard]] std::vector<Eigen::MatrixXd> fisher_batch_serial(std::size_t count,
                                                               const FisherTask &task);

/// Same results as the serial kernel; tasks are spread over OpenMP threads
/// and each result lands in its own slot, so the output is schedule-independent.
[[nodiscard]] std::vector<Eigen::MatrixXd> fisher_batch_omp(std::size_t count,
                                                            const FisherTask &task);

} // namespace pqnn::kernels
