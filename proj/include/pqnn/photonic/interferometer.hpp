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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "pqnn/photonic/permanent.hpp"

namespace pqnn {

/// Upper bound on optical modes, the width of the target chip.
inline constexpr int kMaxModes = 12;

/**
 * Linear-optical element. Beamsplitters act on modes (a, b) as
 * [[sqrt(T), sqrt(R)], [sqrt(R), -sqrt(T)]] with R = reflectivity and
 * T = 1 - R. Phase shifters multiply mode a by exp(i*phase).
 */
struct OpticalElement {
    enum class Kind { BeamSplitter, PhaseShifter };

    Kind kind;
    double value; // reflectivity or phase
    std::array<int, 2> modes; // second entry unused for phase shifters

    static OpticalElement beam_splitter(int a, int b, double reflectivity) {
        return {Kind::BeamSplitter, reflectivity, {a, b}};
    }
    static OpticalElement phase_shifter(int a, double phase) {
        return {Kind::PhaseShifter, phase, {a, -1}};
    }

    /// Throws ArgumentError when indices or reflectivity are out of range.
    void validate(int m) const;

    friend bool operator==(const OpticalElement &, const OpticalElement &) = default;
};

/// m x m unitary with U(out, in) the single-photon transfer amplitude.
class InterferometerUnitary {
  public:
    explicit InterferometerUnitary(int m);
    explicit InterferometerUnitary(CMatrix entries);

    [[nodiscard]] int modes() const noexcept { return static_cast<int>(entries_.rows()); }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return entries_; }
    [[nodiscard]] Complex operator()(int out, int in) const { return entries_(out, in); }

    /// max |U U^dagger - I| entry.
    [[nodiscard]] double unitarity_error() const;

    /// Left-multiplies by the element's unitary (element applied after U).
    void apply(const OpticalElement &element);

  private:
    CMatrix entries_;
};

/**
 * Product of the element unitaries in list order. When `phase_noise_seed`
 * is set every phase shifter is perturbed by an independent N(0, phase_sigma)
 * draw taken in element order.
 */
[[nodiscard]] InterferometerUnitary
compile_interferometer(std::span<const OpticalElement> elements, int m,
                       std::optional<std::uint64_t> phase_noise_seed = std::nullopt,
                       double phase_sigma = 0.0);

void to_json(nlohmann::json &j, const OpticalElement &e);
void from_json(const nlohmann::json &j, OpticalElement &e);

} // namespace pqnn
