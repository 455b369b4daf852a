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
#include <span>
#include <vector>

#include <json.hpp>

#include "pqnn/core/circuit.hpp"
#include "pqnn/photonic/cnot.hpp"

namespace pqnn {

/// Qubit q occupies rails (2q, 2q+1); each CNOT appends two vacuum modes.
struct RailLayout {
    int modes = 0;
    std::vector<std::array<int, 2>> qubit_rails;
    std::vector<int> ancilla_modes;

    friend bool operator==(const RailLayout &, const RailLayout &) = default;
};

/// Dual-rail compilation of a gate circuit at one fixed binding.
struct PhotonicCircuit {
    RailLayout layout;
    std::vector<OpticalElement> elements;
    PostselectionRule rule;
    FockState input; // |0...0>: one photon in each qubit's first rail

    [[nodiscard]] int num_qubits() const noexcept { return rule.num_qubits(); }
    /// Number of postselected CNOT blocks, which sets the ideal success rate.
    int cnot_count = 0;

    friend bool operator==(const PhotonicCircuit &, const PhotonicCircuit &) = default;
};

/**
 * Rail-pair elements whose 2x2 action equals the rotation up to a global
 * phase: Rz -> phase on rail 1; Ry -> beamsplitter plus a pi phase;
 * Rx -> Ry conjugated by quarter-turn phases.
 */
[[nodiscard]] std::vector<OpticalElement> rotation_elements(GateKind kind, double angle, int rail0,
                                                           int rail1);

/// Throws CapabilityError for more than one CNOT, more than kMaxPhotons
/// qubits, or more than kMaxModes modes.
[[nodiscard]] PhotonicCircuit compile_with_angles(const ParameterizedCircuit &circuit,
                                                  std::span<const double> gate_angles);

[[nodiscard]] PhotonicCircuit compile_circuit_to_photonics(const ParameterizedCircuit &circuit,
                                                           std::span<const double> features,
                                                           std::span<const double> weights);

/**
 * Noiseless postselected outcome probabilities (unnormalized; they sum to
 * the postselection success probability).
 */
[[nodiscard]] std::vector<double> postselected_probabilities(const PhotonicCircuit &circuit,
                                                             const InterferometerUnitary &u);

/// Postselected amplitudes over the computational outcomes.
[[nodiscard]] std::vector<Complex> postselected_amplitudes(const PhotonicCircuit &circuit,
                                                           const InterferometerUnitary &u);

void to_json(nlohmann::json &j, const PhotonicCircuit &c);
void from_json(const nlohmann::json &j, PhotonicCircuit &c);

} // namespace pqnn
