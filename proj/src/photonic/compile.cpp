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

#include "pqnn/photonic/compile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {
constexpr double kPi = std::numbers::pi;

// Ry(theta) = [[c, -s], [s, c]] with c = cos(theta/2), s = sin(theta/2).
// With theta reduced to [0, 2pi), s >= 0 and the beamsplitter
// B = [[|c|, s], [s, -|c|]] gives Ry = B * diag(1, -1) for c >= 0 and
// Ry = diag(-1, 1) * B for c < 0.
std::vector<OpticalElement> ry_elements(double theta, int r0, int r1) {
    double reduced = std::fmod(theta, 2.0 * kPi);
    if (reduced < 0.0) {
        reduced += 2.0 * kPi;
    }
    const double c = std::cos(reduced / 2.0);
    const double s = std::sin(reduced / 2.0);
    const double reflectivity = std::clamp(s * s, 0.0, 1.0);
    if (c >= 0.0) {
        return {OpticalElement::phase_shifter(r1, kPi),
                OpticalElement::beam_splitter(r0, r1, reflectivity)};
    }
    return {OpticalElement::beam_splitter(r0, r1, reflectivity),
            OpticalElement::phase_shifter(r1, kPi)};
}
} // namespace

std::vector<OpticalElement> rotation_elements(GateKind kind, double angle, int rail0, int rail1) {
    switch (kind) {
    case GateKind::Rz:
        return {OpticalElement::phase_shifter(rail1, angle)};
    case GateKind::Ry:
        return ry_elements(angle, rail0, rail1);
    case GateKind::Rx: {
        // Rx = S^dagger Ry S with S = diag(1, i).
        std::vector<OpticalElement> out{OpticalElement::phase_shifter(rail1, kPi / 2.0)};
        const auto ry = ry_elements(angle, rail0, rail1);
        out.insert(out.end(), ry.begin(), ry.end());
        out.push_back(OpticalElement::phase_shifter(rail1, -kPi / 2.0));
        return out;
    }
    case GateKind::CNOT:
        break;
    }
    throw CapabilityError("rotation_elements called with a non-rotation gate");
}

PhotonicCircuit compile_with_angles(const ParameterizedCircuit &circuit,
                                    std::span<const double> gate_angles) {
    circuit.validate();
    if (gate_angles.size() != circuit.gates.size()) {
        throw ConfigError("one angle per gate required");
    }
    const int n = circuit.n_qubits;
    if (n > kMaxPhotons) {
        throw CapabilityError("photonic compilation supports at most " +
                              std::to_string(kMaxPhotons) + " qubits");
    }
    int cnots = 0;
    for (const auto &g : circuit.gates) {
        cnots += g.kind == GateKind::CNOT ? 1 : 0;
    }
    if (cnots > 1) {
        throw CapabilityError("postselected CNOT blocks do not compose; at most one CNOT");
    }

    PhotonicCircuit out;
    out.cnot_count = cnots;
    out.layout.modes = 2 * n + 2 * cnots;
    if (out.layout.modes > kMaxModes) {
        throw CapabilityError("circuit needs more than " + std::to_string(kMaxModes) + " modes");
    }
    for (int q = 0; q < n; ++q) {
        out.layout.qubit_rails.push_back({2 * q, 2 * q + 1});
    }
    for (int a = 2 * n; a < out.layout.modes; ++a) {
        out.layout.ancilla_modes.push_back(a);
    }
    out.rule.rail_pairs = out.layout.qubit_rails;
    out.input.occupations.assign(static_cast<std::size_t>(out.layout.modes), 0);
    for (int q = 0; q < n; ++q) {
        out.input.occupations[static_cast<std::size_t>(2 * q)] = 1;
    }

    int next_ancilla = 2 * n;
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate &g = circuit.gates[i];
        const auto &rails = out.layout.qubit_rails[static_cast<std::size_t>(g.target)];
        if (g.kind == GateKind::CNOT) {
            const auto &crails = out.layout.qubit_rails[static_cast<std::size_t>(*g.control)];
            const auto block = cnot_elements(
                {crails[0], crails[1], rails[0], rails[1], next_ancilla, next_ancilla + 1});
            next_ancilla += 2;
            out.elements.insert(out.elements.end(), block.begin(), block.end());
            continue;
        }
        const auto block = rotation_elements(g.kind, gate_angles[i], rails[0], rails[1]);
        out.elements.insert(out.elements.end(), block.begin(), block.end());
    }
    return out;
}

PhotonicCircuit compile_circuit_to_photonics(const ParameterizedCircuit &circuit,
                                             std::span<const double> features,
                                             std::span<const double> weights) {
    circuit.validate();
    return compile_with_angles(circuit, circuit.bind(features, weights));
}

std::vector<Complex> postselected_amplitudes(const PhotonicCircuit &circuit,
                                             const InterferometerUnitary &u) {
    const int n = circuit.num_qubits();
    const auto in_modes = circuit.input.photon_modes();
    std::vector<Complex> amps(std::size_t{1} << static_cast<unsigned>(n));
    CMatrix sub(n, n);
    for (std::size_t outcome = 0; outcome < amps.size(); ++outcome) {
        // Accepted outputs have one photon per rail pair, so all factorials are 1.
        for (int q = 0; q < n; ++q) {
            const auto bit = (outcome >> static_cast<unsigned>(n - 1 - q)) & 1U;
            const int out_mode = circuit.rule.rail_pairs[static_cast<std::size_t>(q)][bit];
            for (int c = 0; c < n; ++c) {
                sub(q, c) = u(out_mode, in_modes[static_cast<std::size_t>(c)]);
            }
        }
        amps[outcome] = permanent(sub);
    }
    return amps;
}

std::vector<double> postselected_probabilities(const PhotonicCircuit &circuit,
                                               const InterferometerUnitary &u) {
    const auto amps = postselected_amplitudes(circuit, u);
    std::vector<double> p(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        p[i] = std::norm(amps[i]);
    }
    return p;
}

void to_json(nlohmann::json &j, const PhotonicCircuit &c) {
    j = {{"modes", c.layout.modes},
         {"qubit_rails", c.layout.qubit_rails},
         {"ancilla_modes", c.layout.ancilla_modes},
         {"input", c.input.occupations},
         {"cnot_count", c.cnot_count},
         {"elements", c.elements},
         {"postselection", c.rule}};
}

void from_json(const nlohmann::json &j, PhotonicCircuit &c) {
    c.layout.modes = j.at("modes").get<int>();
    c.layout.qubit_rails = j.at("qubit_rails").get<std::vector<std::array<int, 2>>>();
    c.layout.ancilla_modes = j.at("ancilla_modes").get<std::vector<int>>();
    c.input.occupations = j.at("input").get<std::vector<int>>();
    c.cnot_count = j.value("cnot_count", 0);
    c.elements = j.at("elements").get<std::vector<OpticalElement>>();
    c.rule = j.at("postselection").get<PostselectionRule>();
    for (const auto &e : c.elements) {
        e.validate(c.layout.modes);
    }
}

} // namespace pqnn
