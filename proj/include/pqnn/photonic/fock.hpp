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

#include <map>
#include <vector>

#include "pqnn/photonic/interferometer.hpp"

namespace pqnn {

/// Largest photon number fock_evolve accepts.
inline constexpr int kMaxPhotons = 3;

struct FockState {
    std::vector<int> occupations;

    [[nodiscard]] int modes() const noexcept { return static_cast<int>(occupations.size()); }
    [[nodiscard]] int photons() const noexcept;

    /// Input-mode list with multiplicity, e.g. (2,0,1) -> {0,0,2}.
    [[nodiscard]] std::vector<int> photon_modes() const;

    friend auto operator<=>(const FockState &, const FockState &) = default;
};

using FockAmplitudeMap = std::map<FockState, Complex>;

/// Every occupation pattern of `photons` photons over `modes` modes, in
/// lexicographically descending order of the occupation vector.
[[nodiscard]] std::vector<FockState> enumerate_fock_states(int modes, int photons);

/**
 * Output amplitudes of an indistinguishable multi-photon input:
 * <s|U|t> = perm(U[s,t]) / sqrt(prod s_i! prod t_j!). Zero amplitudes are
 * kept so the map covers the whole photon-number sector.
 * Throws CapabilityError above kMaxPhotons photons.
 */
[[nodiscard]] FockAmplitudeMap fock_evolve(const InterferometerUnitary &u, const FockState &input);

/// Output-pattern probabilities for fully distinguishable photons, each
/// routed independently with |U(out,in)|^2.
[[nodiscard]] std::map<FockState, double> distinguishable_distribution(const InterferometerUnitary &u,
                                                                      const FockState &input);

/**
 * Partially distinguishable photons as a mixture: weight `indistinguishability`
 * on the interfering distribution, the remainder on the distinguishable one.
 */
[[nodiscard]] std::map<FockState, double> mixed_distribution(const InterferometerUnitary &u,
                                                            const FockState &input,
                                                            double indistinguishability);

} // namespace pqnn
