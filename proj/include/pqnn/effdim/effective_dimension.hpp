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
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pqnn/data/dataset.hpp"
#include "pqnn/models/model.hpp"

namespace pqnn {

struct EDConfig {
    double n = 1e6;
    double gamma = 1.0;
    int n_theta = 100;
    int n_data = 100;
    std::uint64_t seed = 1;
    double encoding_scale = kDefaultEncodingScale;
    /// Draw Fisher inputs from these rows instead of the unit square.
    std::optional<Dataset> inputs;
    bool parallel = true;

    void validate() const;
};

/// gamma n / (2 pi ln n).
[[nodiscard]] double ed_kappa(double n, double gamma);

/**
 * Fisher matrices at n_theta parameter draws (uniform on [0, 2pi)^d for
 * QNNs, [-1, 1]^d for ANNs), each averaged over n_data inputs.
 */
[[nodiscard]] std::vector<Eigen::MatrixXd> sample_fishers(ModelKind kind, const EDConfig &cfg);

/**
 * Global effective dimension from Fisher samples:
 * 2 ln(mean_k sqrt det(I + kappa Fhat_k)) / ln kappa with
 * Fhat_k = d F_k / mean_j tr F_j. Zero when every sample is the zero matrix.
 */
[[nodiscard]] double effective_dimension(std::span<const Eigen::MatrixXd> fishers, double n,
                                         double gamma);

[[nodiscard]] double effective_dimension(ModelKind kind, const EDConfig &cfg);

/// ed / d; throws ArgumentError for d = 0.
[[nodiscard]] double normalized_ed(double ed, int d);

/// (n, ED) for each requested n, reusing one set of Fisher samples.
[[nodiscard]] std::vector<std::pair<double, double>>
ed_convergence_curve(ModelKind kind, std::span<const double> n_values, const EDConfig &cfg);

} // namespace pqnn
