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

#include <functional>
#include <span>
#include <vector>

namespace pqnn {

struct CobylaConfig {
    double rho_begin = 0.5;
    double rho_end = 1e-3;
    int max_evals = 200;
};

struct CobylaResult {
    std::vector<double> x;
    double f = 0.0;
    int evals = 0;
    bool converged = false; // false when max_evals ran out first
};

using Objective = std::function<double(std::span<const double>)>;

/**
 * Powell's COBYLA without constraints. Keeps a (d+1)-vertex simplex,
 * interpolates a linear model of the objective through it, and alternates
 * trust-region steps of length rho along the model's descent direction
 * with geometry-repair steps, halving rho from rho_begin down to rho_end.
 *
 * The objective may be stochastic; every call is a fresh evaluation.
 * Returns the best vertex seen.
 */
[[nodiscard]] CobylaResult cobyla_minimize(const Objective &objective, std::vector<double> x0,
                                           const CobylaConfig &cfg);

} // namespace pqnn
