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

#include "pqnn/photonic/fock.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

void enumerate_into(int mode, int remaining, std::vector<int> &occ, std::vector<FockState> &out) {
    const int m = static_cast<int>(occ.size());
    if (mode == m - 1) {
        occ[static_cast<std::size_t>(mode)] = remaining;
        out.push_back(FockState{occ});
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        occ[static_cast<std::size_t>(mode)] = k;
        enumerate_into(mode + 1, remaining - k, occ, out);
    }
}

void check_input(const InterferometerUnitary &u, const FockState &input) {
    if (input.modes() != u.modes()) {
        throw ArgumentError("Fock state mode count does not match the interferometer");
    }
    for (int n : input.occupations) {
        if (n < 0) {
            throw ArgumentError("negative occupation");
        }
    }
    if (input.photons() > kMaxPhotons) {
        throw CapabilityError("at most " + std::to_string(kMaxPhotons) +
                              " photons are supported, got " + std::to_string(input.photons()));
    }
}

} // namespace

int FockState::photons() const noexcept {
    return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::vector<int> FockState::photon_modes() const {
    std::vector<int> out;
    for (int mode = 0; mode < modes(); ++mode) {
        for (int k = 0; k < occupations[static_cast<std::size_t>(mode)]; ++k) {
            out.push_back(mode);
        }
    }
    return out;
}

std::vector<FockState> enumerate_fock_states(int modes, int photons) {
    if (modes < 1 || photons < 0) {
        throw ArgumentError("enumerate_fock_states: bad arguments");
    }
    std::vector<FockState> out;
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    enumerate_into(0, photons, occ, out);
    return out;
}

FockAmplitudeMap fock_evolve(const InterferometerUnitary &u, const FockState &input) {
    check_input(u, input);
    const auto in_modes = input.photon_modes();
    const auto n = static_cast<Eigen::Index>(in_modes.size());
    double in_norm = 1.0;
    for (int k : input.occupations) {
        in_norm *= factorial(k);
    }

    FockAmplitudeMap out;
    CMatrix sub(n, n);
    for (const auto &s : enumerate_fock_states(u.modes(), input.photons())) {
        const auto out_modes = s.photon_modes();
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                sub(r, c) = u(out_modes[static_cast<std::size_t>(r)], in_modes[static_cast<std::size_t>(c)]);
            }
        }
        double out_norm = 1.0;
        for (int k : s.occupations) {
            out_norm *= factorial(k);
        }
        out.emplace(s, permanent(sub) / std::sqrt(out_norm * in_norm));
    }
    return out;
}

std::map<FockState, double> distinguishable_distribution(const InterferometerUnitary &u,
                                                         const FockState &input) {
    check_input(u, input);
    const auto in_modes = input.photon_modes();
    const int m = u.modes();
    std::map<FockState, double> out;
    for (const auto &s : enumerate_fock_states(m, input.photons())) {
        out.emplace(s, 0.0);
    }
    // Walk every assignment of output modes to photons (m^n tuples).
    const std::size_t n = in_modes.size();
    std::vector<int> assign(n, 0);
    while (true) {
        double p = 1.0;
        std::vector<int> occ(static_cast<std::size_t>(m), 0);
        for (std::size_t k = 0; k < n; ++k) {
            p *= std::norm(u(assign[k], in_modes[k]));
            ++occ[static_cast<std::size_t>(assign[k])];
        }
        out[FockState{occ}] += p;
        std::size_t k = 0;
        while (k < n && ++assign[k] == m) {
            assign[k] = 0;
            ++k;
        }
        if (k == n) {
            break;
        }
    }
    return out;
}

std::map<FockState, double> mixed_distribution(const InterferometerUnitary &u,
                                               const FockState &input,
                                               double indistinguishability) {
    if (!(indistinguishability >= 0.0 && indistinguishability <= 1.0)) {
        throw ArgumentError("indistinguishability must lie in [0,1]");
    }
    auto out = distinguishable_distribution(u, input);
    const auto amps = fock_evolve(u, input);
    for (auto &[state, p] : out) {
        p = indistinguishability * std::norm(amps.at(state)) + (1.0 - indistinguishability) * p;
    }
    return out;
}

} // namespace pqnn
