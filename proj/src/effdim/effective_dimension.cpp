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

#include "pqnn/effdim/effective_dimension.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pqnn/effdim/fisher.hpp"
#include "pqnn/error.hpp"
#include "pqnn/kernels/fisher_kernels.hpp"
#include "pqnn/rng.hpp"
#include "pqnn/training/train.hpp"

namespace pqnn {

void EDConfig::validate() const {
    if (!(n >= 2.0)) {
        throw ConfigError("effective dimension needs n >= 2");
    }
    if (!(gamma > 0.0 && gamma <= 1.0)) {
        throw ConfigError("gamma must lie in (0, 1]");
    }
    if (n_theta < 1 || n_data < 1) {
        throw ConfigError("n_theta and n_data must be >= 1");
    }
    if (inputs && inputs->empty()) {
        throw ConfigError("input dataset is empty");
    }
    if (!(ed_kappa(n, gamma) > 1.0)) {
        throw ConfigError("gamma n / (2 pi ln n) must exceed 1");
    }
}

double ed_kappa(double n, double gamma) {
    return gamma * n / (2.0 * std::numbers::pi * std::log(n));
}

std::vector<Eigen::MatrixXd> sample_fishers(ModelKind kind, const EDConfig &cfg) {
    cfg.validate();
    const kernels::FisherTask task = [&](std::size_t k) {
        const auto theta = initial_params(kind, derive_seed(cfg.seed, 0, k));
        const auto xs = cfg.inputs ? dataset_inputs(*cfg.inputs, cfg.n_data, derive_seed(cfg.seed, 1, k))
                                   : uniform_inputs(cfg.n_data, derive_seed(cfg.seed, 1, k));
        return fisher_at(kind, theta, xs, cfg.encoding_scale).matrix;
    };
    const auto count = static_cast<std::size_t>(cfg.n_theta);
    return cfg.parallel ? kernels::fisher_batch_omp(count, task)
                        : kernels::fisher_batch_serial(count, task);
}

double effective_dimension(std::span<const Eigen::MatrixXd> fishers, double n, double gamma) {
    if (fishers.empty()) {
        throw ArgumentError("need at least one Fisher sample");
    }
    const double kappa = ed_kappa(n, gamma);
    if (!(kappa > 1.0)) {
        throw ArgumentError("gamma n / (2 pi ln n) must exceed 1");
    }
    const auto d = fishers.front().rows();
    double mean_trace = 0.0;
    for (const auto &f : fishers) {
        mean_trace += f.trace();
    }
    mean_trace /= static_cast<double>(fishers.size());
    if (d == 0 || !(mean_trace > 0.0)) {
        return 0.0;
    }
    // ln sqrt det(I + kappa Fhat) per sample, then a log-sum-exp mean.
    std::vector<double> z;
    z.reserve(fishers.size());
    const double scale = kappa * static_cast<double>(d) / mean_trace;
    for (const auto &f : fishers) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(f, Eigen::EigenvaluesOnly);
        double half_logdet = 0.0;
        for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i) {
            half_logdet += 0.5 * std::log1p(scale * std::max(eig.eigenvalues()(i), 0.0));
        }
        z.push_back(half_logdet);
    }
    const double zmax = *std::max_element(z.begin(), z.end());
    double acc = 0.0;
    for (const double v : z) {
        acc += std::exp(v - zmax);
    }
    const double log_mean = zmax + std::log(acc / static_cast<double>(z.size()));
    return 2.0 * log_mean / std::log(kappa);
}

double effective_dimension(ModelKind kind, const EDConfig &cfg) {
    const auto fishers = sample_fishers(kind, cfg);
    return effective_dimension(fishers, cfg.n, cfg.gamma);
}

double normalized_ed(double ed, int d) {
    if (d <= 0) {
        throw ArgumentError("normalized_ed needs d >= 1");
    }
    return ed / static_cast<double>(d);
}

std::vector<std::pair<double, double>>
ed_convergence_curve(ModelKind kind, std::span<const double> n_values, const EDConfig &cfg) {
    const auto fishers = sample_fishers(kind, cfg);
    std::vector<std::pair<double, double>> out;
    out.reserve(n_values.size());
    for (const double n : n_values) {
        out.emplace_back(n, effective_dimension(fishers, n, cfg.gamma));
    }
    return out;
}

} // namespace pqnn
