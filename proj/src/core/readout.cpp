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

#include "pqnn/core/readout.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "pqnn/error.hpp"

namespace pqnn {

double odd_parity_probability(std::span<const double> probabilities) {
    double odd = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if ((std::popcount(i) & 1) != 0) {
            odd += probabilities[i];
        }
    }
    return odd;
}

double class_probability(const StateVector &state) {
    double odd = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((std::popcount(i) & 1) != 0) {
            odd += std::norm(amps[i]);
        }
    }
    return odd;
}

double sampled_parity(std::span<const double> probabilities, long shots, std::uint64_t rng_seed) {
    if (shots < 1) {
        throw ArgumentError("shots must be >= 1");
    }
    const double p = std::clamp(odd_parity_probability(probabilities), 0.0, 1.0);
    // Summing `shots` Bernoulli parity draws is exactly one binomial draw.
    std::mt19937_64 gen(rng_seed);
    std::binomial_distribution<long> dist(shots, p);
    return static_cast<double>(dist(gen)) / static_cast<double>(shots);
}

double sampled_class_probability(const StateVector &state, long shots, std::uint64_t rng_seed) {
    const auto probs = state.probabilities();
    return sampled_parity(probs, shots, rng_seed);
}

double depolarized_parity(double exact_parity, double p_gate, int n_gates) {
    if (p_gate < 0.0 || p_gate > 1.0) {
        throw ArgumentError("depolarizing strength must lie in [0,1]");
    }
    const double keep = std::pow(1.0 - p_gate, n_gates);
    return keep * exact_parity + (1.0 - keep) * 0.5;
}

} // namespace pqnn
