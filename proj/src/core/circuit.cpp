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

#include "pqnn/core/circuit.hpp"

#include <string>

#include "pqnn/error.hpp"

namespace pqnn {

void ParameterizedCircuit::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigError("circuit qubit count out of range");
    }
    if (encoding_slots < 0 || weight_slots < 0) {
        throw ConfigError("negative slot count");
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        const std::string where = "gate " + std::to_string(i) + ": ";
        if (g.target < 0 || g.target >= n_qubits) {
            throw ConfigError(where + "target out of range");
        }
        if (g.kind == GateKind::CNOT) {
            if (!g.control) {
                throw ConfigError(where + "CNOT without control");
            }
            if (*g.control < 0 || *g.control >= n_qubits || *g.control == g.target) {
                throw ConfigError(where + "bad CNOT control");
            }
            if (g.slot) {
                throw ConfigError(where + "CNOT cannot carry an angle slot");
            }
            continue;
        }
        if (g.control) {
            throw ConfigError(where + "rotation with a control qubit");
        }
        if (!g.slot) {
            throw ConfigError(where + "rotation without an angle slot");
        }
        const int limit = g.slot->source == SlotSource::Encoding ? encoding_slots : weight_slots;
        if (g.slot->index < 0 || g.slot->index >= limit) {
            throw ConfigError(where + "slot index out of range");
        }
    }
}

std::vector<double> ParameterizedCircuit::bind(std::span<const double> features,
                                               std::span<const double> weights) const {
    if (static_cast<int>(features.size()) != encoding_slots) {
        throw ConfigError("expected " + std::to_string(encoding_slots) + " features, got " +
                          std::to_string(features.size()));
    }
    if (static_cast<int>(weights.size()) != weight_slots) {
        throw ConfigError("expected " + std::to_string(weight_slots) + " weights, got " +
                          std::to_string(weights.size()));
    }
    std::vector<double> angles(gates.size(), 0.0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const auto &slot = gates[i].slot;
        if (!slot) {
            continue;
        }
        angles[i] = slot->source == SlotSource::Encoding
                        ? encoding_scale * features[static_cast<std::size_t>(slot->index)]
                        : weights[static_cast<std::size_t>(slot->index)];
    }
    return angles;
}

StateVector apply_gate(StateVector state, const Gate &gate, std::optional<double> angle) {
    if (is_rotation(gate.kind) != angle.has_value()) {
        throw ConfigError("angle must be supplied iff the gate is a rotation");
    }
    if (gate.kind == GateKind::CNOT) {
        if (!gate.control) {
            throw ConfigError("CNOT without control");
        }
        if (*gate.control == gate.target) {
            throw ConfigError("CNOT control equals target");
        }
        state.apply_cnot(*gate.control, gate.target);
    } else {
        state.apply_rotation(gate.kind, gate.target, *angle);
    }
    return state;
}

StateVector evolve(const ParameterizedCircuit &circuit, std::span<const double> gate_angles) {
    if (gate_angles.size() != circuit.gates.size()) {
        throw ConfigError("one angle per gate required");
    }
    StateVector state(circuit.n_qubits);
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        const Gate &g = circuit.gates[i];
        if (g.kind == GateKind::CNOT) {
            state.apply_cnot(*g.control, g.target);
        } else {
            state.apply_rotation(g.kind, g.target, gate_angles[i]);
        }
    }
    return state;
}

StateVector run_circuit(const ParameterizedCircuit &circuit, std::span<const double> features,
                        std::span<const double> weights) {
    circuit.validate();
    const auto angles = circuit.bind(features, weights);
    return evolve(circuit, angles);
}

ParameterizedCircuit qnn2_circuit(double encoding_scale) {
    ParameterizedCircuit c;
    c.n_qubits = 2;
    c.encoding_slots = 2;
    c.weight_slots = 2;
    c.encoding_scale = encoding_scale;
    c.gates = {
        Gate::rx(0, feature(0)), Gate::rx(1, feature(1)), Gate::cnot(0, 1),
        Gate::ry(0, weight(0)),  Gate::ry(1, weight(1)),
    };
    return c;
}

ParameterizedCircuit qnn6_circuit(double encoding_scale) {
    ParameterizedCircuit c;
    c.n_qubits = 2;
    c.encoding_slots = 2;
    c.weight_slots = 6;
    c.encoding_scale = encoding_scale;
    c.gates = {
        Gate::rx(0, feature(0)), Gate::rx(1, feature(1)),
        Gate::rz(0, weight(0)),  Gate::ry(0, weight(1)),
        Gate::rz(1, weight(3)),  Gate::ry(1, weight(4)),
        Gate::cnot(0, 1),
        Gate::rz(0, weight(2)),  Gate::rz(1, weight(5)),
    };
    return c;
}

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::Rx:
        return "Rx";
    case GateKind::Ry:
        return "Ry";
    case GateKind::Rz:
        return "Rz";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

GateKind gate_kind_from_string(const std::string &name) {
    if (name == "Rx") {
        return GateKind::Rx;
    }
    if (name == "Ry") {
        return GateKind::Ry;
    }
    if (name == "Rz") {
        return GateKind::Rz;
    }
    if (name == "CNOT") {
        return GateKind::CNOT;
    }
    throw ConfigError("unknown gate kind '" + name + "'");
}

void to_json(nlohmann::json &j, const Gate &g) {
    j = nlohmann::json{{"kind", to_string(g.kind)}, {"target", g.target}};
    if (g.control) {
        j["control"] = *g.control;
    }
    if (g.slot) {
        j["slot"] = {{"source", g.slot->source == SlotSource::Encoding ? "feature" : "weight"},
                     {"index", g.slot->index}};
    }
}

void from_json(const nlohmann::json &j, Gate &g) {
    g.kind = gate_kind_from_string(j.at("kind").get<std::string>());
    g.target = j.at("target").get<int>();
    g.control.reset();
    g.slot.reset();
    if (j.contains("control")) {
        g.control = j.at("control").get<int>();
    }
    if (j.contains("slot")) {
        const auto &s = j.at("slot");
        const auto source = s.at("source").get<std::string>();
        if (source != "feature" && source != "weight") {
            throw ConfigError("slot source must be 'feature' or 'weight'");
        }
        g.slot = SlotRef{source == "feature" ? SlotSource::Encoding : SlotSource::Weight,
                         s.at("index").get<int>()};
    }
}

void to_json(nlohmann::json &j, const ParameterizedCircuit &c) {
    j = nlohmann::json{{"n_qubits", c.n_qubits},
                       {"encoding_slots", c.encoding_slots},
                       {"weight_slots", c.weight_slots},
                       {"encoding_scale", c.encoding_scale},
                       {"gates", c.gates}};
}

void from_json(const nlohmann::json &j, ParameterizedCircuit &c) {
    c.n_qubits = j.at("n_qubits").get<int>();
    c.encoding_slots = j.at("encoding_slots").get<int>();
    c.weight_slots = j.at("weight_slots").get<int>();
    c.encoding_scale = j.value("encoding_scale", kDefaultEncodingScale);
    c.gates = j.at("gates").get<std::vector<Gate>>();
    c.validate();
}

} // namespace pqnn
