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

#include "pqnn/photonic/cnot.hpp"

#include <numbers>

namespace pqnn {

int PostselectionRule::outcome(const FockState &pattern) const {
    int total = 0;
    for (int k : pattern.occupations) {
        total += k;
    }
    if (total != num_qubits()) {
        return -1;
    }
    int index = 0;
    for (const auto &[r0, r1] : rail_pairs) {
        const int n0 = pattern.occupations[static_cast<std::size_t>(r0)];
        const int n1 = pattern.occupations[static_cast<std::size_t>(r1)];
        if (n0 + n1 != 1) {
            return -1;
        }
        index = 2 * index + n1;
    }
    return index;
}

std::vector<OpticalElement> cnot_elements(const CnotModes &m) {
    using E = OpticalElement;
    return {
        E::beam_splitter(m.target0, m.target1, 0.5),
        E::beam_splitter(m.control0, m.target0, kCnotCouplerReflectivity),
        E::beam_splitter(m.control1, m.ancilla0, kCnotCouplerReflectivity),
        E::beam_splitter(m.target1, m.ancilla1, kCnotCouplerReflectivity),
        E::beam_splitter(m.target0, m.target1, 0.5),
        E::phase_shifter(m.control1, std::numbers::pi),
    };
}

PostselectedCnot build_postselected_cnot() {
    PostselectedCnot block;
    block.elements = cnot_elements({0, 1, 2, 3, 4, 5});
    block.rule.rail_pairs = {{0, 1}, {2, 3}};
    return block;
}

void to_json(nlohmann::json &j, const PostselectionRule &r) {
    j = {{"kind", "coincidence"}, {"rail_pairs", r.rail_pairs}};
}

void from_json(const nlohmann::json &j, PostselectionRule &r) {
    r.rail_pairs = j.at("rail_pairs").get<std::vector<std::array<int, 2>>>();
}

} // namespace pqnn
