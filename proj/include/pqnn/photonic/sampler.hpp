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

#include <json.hpp>

#include "pqnn/kernels/shot_kernels.hpp"
#include "pqnn/photonic/compile.hpp"

namespace pqnn {

/// Single-photon source and chip imperfections.
struct NoiseParams {
    double brightness = 1.0;
    double indistinguishability = 1.0;
    double g2 = 0.0; // recorded only; multi-photon emission is not simulated
    double transmittance = 1.0;
    double phase_sigma = 0.0; // radians

    /// Published figures for the six-qubit Ascella processor.
    static NoiseParams ascella() { return {0.55, 0.86, 0.00183, 0.022, 0.001}; }
    static NoiseParams noiseless() { return {}; }

    void validate() const;

    friend bool operator==(const NoiseParams &, const NoiseParams &) = default;
};

/// Requested vs accepted shots and the accepted outcome histogram.
struct ShotBatch {
    long requested = 0;
    long accepted = 0;
    int n_qubits = 0;
    std::vector<long> outcome_counts; // indexed by basis outcome, qubit 0 as MSB

    [[nodiscard]] double parity_fraction() const;
};

/// Sampling tables for one jittered compile; see kernels::ShotModel.
[[nodiscard]] kernels::ShotModel build_shot_model(const PhotonicCircuit &circuit,
                                                  const InterferometerUnitary &u,
                                                  const NoiseParams &noise);

/**
 * Per-shot photonic sampling. Phase shifters are jittered once per call;
 * each photon survives with probability `transmittance`; with probability
 * 1 - indistinguishability a shot propagates distinguishably; shots failing
 * coincidence postselection are dropped. Deterministic given the seed and
 * independent of the OpenMP schedule.
 */
[[nodiscard]] ShotBatch sample_shots(const PhotonicCircuit &circuit, const NoiseParams &noise,
                                     long shots, std::uint64_t rng_seed);

/**
 * Outcome distribution conditioned on acceptance, mixing the interfering and
 * distinguishable branches. Loss cancels from the conditional. Also reports
 * the per-requested-shot acceptance probability.
 */
struct AcceptedDistribution {
    std::vector<double> probabilities;
    double acceptance = 0.0;
};
[[nodiscard]] AcceptedDistribution accepted_distribution(const PhotonicCircuit &circuit,
                                                         const InterferometerUnitary &u,
                                                         const NoiseParams &noise);

/**
 * Collects exactly `accepted_shots` postselected outcomes: a multinomial draw
 * from the conditional distribution, with the number of requested shots
 * drawn from the matching negative binomial. Distributionally equal to
 * calling sample_shots until that many shots are accepted.
 */
[[nodiscard]] ShotBatch sample_accepted(const PhotonicCircuit &circuit, const NoiseParams &noise,
                                        long accepted_shots, std::uint64_t rng_seed);

void to_json(nlohmann::json &j, const NoiseParams &n);
void from_json(const nlohmann::json &j, NoiseParams &n);
void to_json(nlohmann::json &j, const ShotBatch &b);
void from_json(const nlohmann::json &j, ShotBatch &b);

} // namespace pqnn
