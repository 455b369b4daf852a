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

#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqnn/core/statevector.hpp"

namespace pqnn {

/// Default multiplier applied to a normalized feature before it is used as
/// a rotation angle.
inline constexpr double kDefaultEncodingScale = 2.0 * std::numbers::pi;

enum class SlotSource { Encoding, Weight };

struct SlotRef {
    SlotSource source;
    int index;

    friend bool operator==(const SlotRef &, const SlotRef &) = default;
};

struct Gate {
    GateKind kind;
    int target;
    std::optional<int> control; // CNOT only
    std::optional<SlotRef> slot; // rotations only

    static Gate rx(int target, SlotRef slot) { return {GateKind::Rx, target, {}, slot}; }
    static Gate ry(int target, SlotRef slot) { return {GateKind::Ry, target, {}, slot}; }
    static Gate rz(int target, SlotRef slot) { return {GateKind::Rz, target, {}, slot}; }
    static Gate cnot(int control, int target) { return {GateKind::CNOT, target, control, {}}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

[[nodiscard]] inline SlotRef feature(int i) { return {SlotSource::Encoding, i}; }
[[nodiscard]] inline SlotRef weight(int i) { return {SlotSource::Weight, i}; }

/**
 * Ordered gate list over `n_qubits` with encoding slots bound to data
 * features and weight slots bound to trainable parameters. An encoding slot
 * resolves to `encoding_scale * feature`.
 */
struct ParameterizedCircuit {
    int n_qubits = 2;
    std::vector<Gate> gates;
    int encoding_slots = 0;
    int weight_slots = 0;
    double encoding_scale = kDefaultEncodingScale;

    /// Throws ConfigError when a gate is malformed or references a missing slot.
    void validate() const;

    /// Per-gate angles (0 for CNOT entries) for a feature/weight binding.
    [[nodiscard]] std::vector<double> bind(std::span<const double> features,
                                           std::span<const double> weights) const;

    friend bool operator==(const ParameterizedCircuit &,
                           const ParameterizedCircuit &) = default;
};

/// Single gate application. `angle` must be present iff the gate is a rotation.
[[nodiscard]] StateVector apply_gate(StateVector state, const Gate &gate,
                                     std::optional<double> angle);

/// Evolves |0...0> through `circuit` using explicit per-gate angles.
[[nodiscard]] StateVector evolve(const ParameterizedCircuit &circuit,
                                 std::span<const double> gate_angles);

[[nodiscard]] StateVector run_circuit(const ParameterizedCircuit &circuit,
                                      std::span<const double> features,
                                      std::span<const double> weights);

/// Rx(x0), Rx(x1); CNOT(0->1); Ry(w0), Ry(w1).
[[nodiscard]] ParameterizedCircuit qnn2_circuit(double encoding_scale = kDefaultEncodingScale);

/// Rx(x_i) per qubit; Rz(w0) Ry(w1) on q0, Rz(w3) Ry(w4) on q1; CNOT(0->1);
/// Rz(w2) on q0, Rz(w5) on q1.
[[nodiscard]] ParameterizedCircuit qnn6_circuit(double encoding_scale = kDefaultEncodingScale);

[[nodiscard]] std::string to_string(GateKind kind);
[[nodiscard]] GateKind gate_kind_from_string(const std::string &name);

void to_json(nlohmann::json &j, const Gate &g);
void from_json(const nlohmann::json &j, Gate &g);
void to_json(nlohmann::json &j, const ParameterizedCircuit &c);
void from_json(const nlohmann::json &j, ParameterizedCircuit &c);

} // namespace pqnn
