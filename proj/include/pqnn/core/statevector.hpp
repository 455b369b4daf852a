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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pqnn {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 6;

enum class GateKind { Rx, Ry, Rz, CNOT };

[[nodiscard]] constexpr bool is_rotation(GateKind kind) noexcept {
    return kind != GateKind::CNOT;
}

/**
 * Dense 2^n amplitude vector. Qubit 0 is the most significant bit of the
 * basis index, so |q0 q1> maps to index 2*q0 + q1.
 */
class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits (1..=6).
    explicit StateVector(int n_qubits);
    StateVector(int n_qubits, std::vector<Complex> amps);

    [[nodiscard]] int num_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;
    [[nodiscard]] std::vector<double> probabilities() const;

    /// In-place rotation exp(-i*angle/2*P) for P in {X, Y, Z} on `target`.
    void apply_rotation(GateKind kind, int target, double angle);
    void apply_cnot(int control, int target);
    /// Arbitrary 2x2 unitary on one qubit, row-major.
    void apply_single(const Complex (&m)[2][2], int target);

  private:
    [[nodiscard]] std::size_t bit_of(int qubit) const noexcept {
        return std::size_t{1} << static_cast<unsigned>(n_qubits_ - 1 - qubit);
    }
    void check_qubit(int q) const;

    int n_qubits_;
    std::vector<Complex> amps_;
};

/// 2x2 matrix of a rotation gate, row-major.
void rotation_matrix(GateKind kind, double angle, Complex (&out)[2][2]);

} // namespace pqnn
