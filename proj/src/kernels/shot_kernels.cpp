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

#include "pqnn/kernels/shot_kernels.hpp"

#include <algorithm>

#include <omp.h>

#include "pqnn/rng.hpp"

namespace pqnn::kernels {

namespace {
std::size_t draw(const std::vector<double> &cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u * cdf.back());
    return std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
}
} // namespace

int sample_one_shot(const ShotModel &model, std::uint64_t seed, long shot_index) {
    SplitMix64 gen(derive_seed(seed, static_cast<std::uint64_t>(shot_index)));
    const auto n_photons = model.photon_cdf.size();
    // Coincidence needs every photon, so any loss rejects the shot.
    bool lost = false;
    for (std::size_t k = 0; k < n_photons; ++k) {
        lost = (gen.uniform() >= model.transmittance) || lost;
    }
    if (lost) {
        return -1;
    }
    if (gen.uniform() < model.indistinguishability) {
        return model.interfering_outcome[draw(model.interfering_cdf, gen.uniform())];
    }
    int outcome = 0;
    unsigned seen = 0;
    for (std::size_t k = 0; k < n_photons; ++k) {
        const auto mode = draw(model.photon_cdf[k], gen.uniform());
        const int pair = model.mode_pair[mode];
        if (pair < 0 || (seen & (1U << static_cast<unsigned>(pair))) != 0U) {
            return -1;
        }
        seen |= 1U << static_cast<unsigned>(pair);
        if (model.mode_bit[mode] != 0) {
            outcome |= 1 << (model.n_pairs - 1 - pair);
        }
    }
    return seen == (1U << static_cast<unsigned>(model.n_pairs)) - 1U ? outcome : -1;
}

ShotTally sample_shots_serial(const ShotModel &model, long shots, std::uint64_t seed) {
    ShotTally tally;
    tally.requested = shots;
    tally.counts.assign(static_cast<std::size_t>(model.n_outcomes), 0);
    for (long s = 0; s < shots; ++s) {
        const int o = sample_one_shot(model, seed, s);
        if (o >= 0) {
            ++tally.counts[static_cast<std::size_t>(o)];
            ++tally.accepted;
        }
    }
    return tally;
}

ShotTally sample_shots_omp(const ShotModel &model, long shots, std::uint64_t seed) {
    ShotTally tally;
    tally.requested = shots;
    tally.counts.assign(static_cast<std::size_t>(model.n_outcomes), 0);
    const int n_out = model.n_outcomes;
#pragma omp parallel
    {
        std::vector<long> local(static_cast<std::size_t>(n_out), 0);
#pragma omp for schedule(static)
        for (long s = 0; s < shots; ++s) {
            const int o = sample_one_shot(model, seed, s);
            if (o >= 0) {
                ++local[static_cast<std::size_t>(o)];
            }
        }
#pragma omp critical
        for (int i = 0; i < n_out; ++i) {
            tally.counts[static_cast<std::size_t>(i)] += local[static_cast<std::size_t>(i)];
        }
    }
    for (long c : tally.counts) {
        tally.accepted += c;
    }
    return tally;
}

} // namespace pqnn::kernels
