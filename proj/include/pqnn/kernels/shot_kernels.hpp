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
#include <vector>

namespace pqnn::kernels {

/**
 * Flattened per-shot sampling tables for one compiled interferometer.
 * Output patterns of the interfering branch are indexed 0..P-1; the
 * distinguishable branch routes each photon through its own column CDF.
 */
struct ShotModel {
    int n_outcomes = 0;
    int n_pairs = 0;
    std::vector<double> interfering_cdf;
    std::vector<int> interfering_outcome; // -1 when postselection rejects
    std::vector<std::vector<double>> photon_cdf; // [photon][output mode]
    std::vector<int> mode_pair; // rail pair of each output mode, -1 otherwise
    std::vector<int> mode_bit;
    double transmittance = 1.0;
    double indistinguishability = 1.0;
};

struct ShotTally {
    long requested = 0;
    long accepted = 0;
    std::vector<long> counts;

    friend bool operator==(const ShotTally &, const ShotTally &) = default;
};

/**
 * One requested shot. The random stream is derived from (seed, shot_index)
 * alone, so any partition of the shot range gives the same outcomes.
 * Returns the accepted outcome index or -1.
 */
[[nodiscard]] int sample_one_shot(const ShotModel &model, std::uint64_t seed, long shot_index);

/// Reference loop over shots.
[[nodiscard]] ShotTally sample_shots_serial(const ShotModel &model, long shots, std::uint64_t seed);

/// OpenMP loop over shots; bit-identical to the serial reference.
[[nodiscard]] ShotTally sample_shots_omp(const ShotModel &model, long shots, std::uint64_t seed);

} // namespace pqnn::kernels
