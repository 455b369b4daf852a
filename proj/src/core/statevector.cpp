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

#include "pqnn/core/statevector.hpp"

#include <cmath>
#include <string>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {
void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw ArgumentError("qubit count must be in 1.." + std::to_string(kMaxQubits) +
                            ", got " + std::to_string(n));
    }
}
} // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << static_cast<unsigned>(n_qubits), Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << static_cast<unsigned>(n_qubits))) {
        throw ArgumentError("amplitude count does not match 2^n");
    }
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        p[i] = std::norm(amps_[i]);
    }
    return p;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_) {
        throw ArgumentError("qubit index " + std::to_string(q) + " out of range");
    }
}

void rotation_matrix(GateKind kind, double angle, Complex (&out)[2][2]) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
    case GateKind::Rx:
        out[0][0] = {c, 0.0};
        out[0][1] = {0.0, -s};
        out[1][0] = {0.0, -s};
        out[1][1] = {c, 0.0};
        return;
    case GateKind::Ry:
        out[0][0] = {c, 0.0};
        out[0][1] = {-s, 0.0};
        out[1][0] = {s, 0.0};
        out[1][1] = {c, 0.0};
        return;
    case GateKind::Rz:
        out[0][0] = {c, -s};
        out[0][1] = {0.0, 0.0};
        out[1][0] = {0.0, 0.0};
        out[1][1] = {c, s};
        return;
    case GateKind::CNOT:
        break;
    }
    throw ArgumentError("rotation_matrix called with CNOT");
}

void StateVector::apply_single(const Complex (&m)[2][2], int target) {
    check_qubit(target);
    const std::size_t bit = bit_of(target);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & bit) != 0U) {
            continue;
        }
        const Complex a0 = amps_[i];
        const Complex a1 = amps_[i | bit];
        amps_[i] = m[0][0] * a0 + m[0][1] * a1;
        amps_[i | bit] = m[1][0] * a0 + m[1][1] * a1;
    }
}

void StateVector::apply_rotation(GateKind kind, int target, double angle) {
    Complex m[2][2];
    rotation_matrix(kind, angle, m);
    apply_single(m, target);
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw ArgumentError("CNOT control equals target");
    }
    const std::size_t cbit = bit_of(control);
    const std::size_t tbit = bit_of(target);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) != 0U && (i & tbit) == 0U) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

} // namespace pqnn
