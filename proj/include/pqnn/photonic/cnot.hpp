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
#include <vector>

#include <json.hpp>

#include "pqnn/photonic/fock.hpp"

namespace pqnn {

/**
 * Coincidence postselection: exactly one photon in each rail pair and none
 * anywhere else. Pair k encodes qubit k; a photon in the second rail reads
 * as |1>. Qubit 0 is the most significant outcome bit.
 */
struct PostselectionRule {
    std::vector<std::array<int, 2>> rail_pairs;

    [[nodiscard]] int num_qubits() const noexcept { return static_cast<int>(rail_pairs.size()); }

    /// Outcome index for an accepted pattern, -1 when the pattern is rejected.
    [[nodiscard]] int outcome(const FockState &pattern) const;

    friend bool operator==(const PostselectionRule &, const PostselectionRule &) = default;
};

/// Cross-coupling of each CNOT coupler; a photon stays in its rail with
/// probability 1/3.
inline constexpr double kCnotCouplerReflectivity = 2.0 / 3.0;

/// Postselection success probability of the CNOT block.
inline constexpr double kCnotSuccessProbability = 1.0 / 9.0;

struct CnotModes {
    int control0, control1, target0, target1, ancilla0, ancilla1;
};

/**
 * Postselected linear-optical CNOT: Hadamard on the target rails, three
 * 1/3 couplers (control0-target0, control1-ancilla0, target1-ancilla1), a
 * second target Hadamard, and a pi phase on control1. Under coincidence
 * postselection the induced two-qubit map is CNOT/3.
 */
[[nodiscard]] std::vector<OpticalElement> cnot_elements(const CnotModes &modes);

struct PostselectedCnot {
    int modes = 6;
    std::vector<OpticalElement> elements;
    PostselectionRule rule;
};

/// Six-mode block: (c0, c1, t0, t1, a0, a1) = modes 0..5.
[[nodiscard]] PostselectedCnot build_postselected_cnot();

void to_json(nlohmann::json &j, const PostselectionRule &r);
void from_json(const nlohmann::json &j, PostselectionRule &r);

} // namespace pqnn
