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

#include "pqnn/photonic/interferometer.hpp"

#include <cmath>
#include <random>
#include <string>

#include "pqnn/error.hpp"

namespace pqnn {

void OpticalElement::validate(int m) const {
    auto in_range = [m](int i) { return i >= 0 && i < m; };
    if (!in_range(modes[0])) {
        throw ArgumentError("optical element mode out of range");
    }
    if (kind == Kind::BeamSplitter) {
        if (!in_range(modes[1]) || modes[0] == modes[1]) {
            throw ArgumentError("beamsplitter needs two distinct in-range modes");
        }
        if (!(value >= 0.0 && value <= 1.0)) {
            throw ArgumentError("beamsplitter reflectivity must lie in [0,1]");
        }
    }
}

InterferometerUnitary::InterferometerUnitary(int m) {
    if (m < 1 || m > kMaxModes) {
        throw ArgumentError("mode count must be in 1.." + std::to_string(kMaxModes));
    }
    entries_ = CMatrix::Identity(m, m);
}

InterferometerUnitary::InterferometerUnitary(CMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1) {
        throw ArgumentError("interferometer matrix must be square and non-empty");
    }
}

double InterferometerUnitary::unitarity_error() const {
    const auto m = entries_.rows();
    const CMatrix residual = entries_ * entries_.adjoint() - CMatrix::Identity(m, m);
    return residual.cwiseAbs().maxCoeff();
}

void InterferometerUnitary::apply(const OpticalElement &element) {
    element.validate(modes());
    const int a = element.modes[0];
    if (element.kind == OpticalElement::Kind::PhaseShifter) {
        entries_.row(a) *= std::polar(1.0, element.value);
        return;
    }
    const int b = element.modes[1];
    const double r = std::sqrt(element.value);
    const double t = std::sqrt(1.0 - element.value);
    const Eigen::RowVectorXcd row_a = entries_.row(a);
    const Eigen::RowVectorXcd row_b = entries_.row(b);
    entries_.row(a) = t * row_a + r * row_b;
    entries_.row(b) = r * row_a - t * row_b;
}

InterferometerUnitary compile_interferometer(std::span<const OpticalElement> elements, int m,
                                             std::optional<std::uint64_t> phase_noise_seed,
                                             double phase_sigma) {
    if (phase_sigma < 0.0) {
        throw ArgumentError("phase_sigma must be non-negative");
    }
    InterferometerUnitary u(m);
    const bool jitter = phase_noise_seed.has_value() && phase_sigma > 0.0;
    std::mt19937_64 gen(phase_noise_seed.value_or(0));
    std::normal_distribution<double> noise(0.0, jitter ? phase_sigma : 1.0);
    for (const auto &e : elements) {
        if (jitter && e.kind == OpticalElement::Kind::PhaseShifter) {
            auto perturbed = e;
            perturbed.value += noise(gen);
            u.apply(perturbed);
        } else {
            u.apply(e);
        }
    }
    return u;
}

void to_json(nlohmann::json &j, const OpticalElement &e) {
    if (e.kind == OpticalElement::Kind::BeamSplitter) {
        j = {{"kind", "BS"}, {"modes", {e.modes[0], e.modes[1]}}, {"reflectivity", e.value}};
    } else {
        j = {{"kind", "PS"}, {"modes", {e.modes[0]}}, {"phase", e.value}};
    }
}

void from_json(const nlohmann::json &j, OpticalElement &e) {
    const auto kind = j.at("kind").get<std::string>();
    const auto modes = j.at("modes").get<std::vector<int>>();
    if (kind == "BS") {
        if (modes.size() != 2) {
            throw ConfigError("BS element needs two modes");
        }
        e = OpticalElement::beam_splitter(modes[0], modes[1], j.at("reflectivity").get<double>());
    } else if (kind == "PS") {
        if (modes.size() != 1) {
            throw ConfigError("PS element needs one mode");
        }
        e = OpticalElement::phase_shifter(modes[0], j.at("phase").get<double>());
    } else {
        throw ConfigError("unknown optical element kind '" + kind + "'");
    }
}

} // namespace pqnn
