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
#include <span>

#include "pqnn/core/statevector.hpp"

namespace pqnn {

/// Probability of an odd-parity basis outcome, read as P(class B).
[[nodiscard]] double class_probability(const StateVector &state);

/// Same readout on an explicit outcome distribution indexed by basis state.
[[nodiscard]] double odd_parity_probability(std::span<const double> probabilities);

/**
 * Empirical odd-parity fraction over `shots` independent basis-measurement
 * samples. Deterministic for a fixed seed; throws ArgumentError on shots < 1.
 */
[[nodiscard]] double sampled_class_probability(const StateVector &state, long shots,
                                               std::uint64_t rng_seed);

/// Shot-sampled parity readout from an outcome distribution.
[[nodiscard]] double sampled_parity(std::span<const double> probabilities, long shots,
                                    std::uint64_t rng_seed);

/**
 * Parity probability after a global depolarizing channel of strength
 * `p_gate` following each of `n_gates` gates. The channel commutes with the
 * unitaries, so the readout mixes toward uniform by 1 - (1 - p)^n.
 */
[[nodiscard]] double depolarized_parity(double exact_parity, double p_gate, int n_gates);

} // namespace pqnn
