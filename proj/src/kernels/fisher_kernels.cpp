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

#include "pqnn/kernels/fisher_kernels.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace pqnn::kernels {

Eigen::MatrixXd binary_fisher(const ProbabilityGradient &model, int d,
                              std::span<const std::array<double, 2>> inputs) {
    Eigen::MatrixXd f = Eigen::MatrixXd::Zero(d, d);
    if (inputs.empty()) {
        return f;
    }
    Eigen::VectorXd g(d);
    for (const auto &x : inputs) {
        g.setZero();
        const double p = std::clamp(model(x, std::span<double>(g.data(), static_cast<std::size_t>(d))),
                                    kFisherClamp, 1.0 - kFisherClamp);
        f.noalias() += (g * g.transpose()) / (p * (1.0 - p));
    }
    return f / static_cast<double>(inputs.size());
}

std::vector<Eigen::MatrixXd> fisher_batch_serial(std::size_t count, const FisherTask &task) {
    std::vector<Eigen::MatrixXd> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = task(i);
    }
    return out;
}

std::vector<Eigen::MatrixXd> fisher_batch_omp(std::size_t count, const FisherTask &task) {
    std::vector<Eigen::MatrixXd> out(count);
    std::exception_ptr error;
    const auto n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = task(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(pqnn_fisher_error)
            if (!error) {
                error = std::current_exception();
            }
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace pqnn::kernels
