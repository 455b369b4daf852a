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

#include "pqnn/photonic/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "pqnn/core/readout.hpp"
#include "pqnn/error.hpp"
#include "pqnn/rng.hpp"

namespace pqnn {

namespace {

std::string outcome_label(std::size_t index, int n_qubits) {
    std::string s(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (((index >> static_cast<unsigned>(n_qubits - 1 - q)) & 1U) != 0U) {
            s[static_cast<std::size_t>(q)] = '1';
        }
    }
    return s;
}

// Stream indices under a call seed.
constexpr std::uint64_t kJitterStream = 0;
constexpr std::uint64_t kShotStream = 1;
constexpr std::uint64_t kMultinomialStream = 2;

} // namespace

void NoiseParams::validate() const {
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!unit(brightness) || !unit(indistinguishability) || !unit(g2) || !unit(transmittance)) {
        throw ArgumentError("noise parameters must lie in [0,1]");
    }
    if (!(phase_sigma >= 0.0)) {
        throw ArgumentError("phase_sigma must be non-negative");
    }
}

double ShotBatch::parity_fraction() const {
    if (accepted == 0) {
        throw ArgumentError("no accepted shots");
    }
    std::vector<double> p(outcome_counts.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = static_cast<double>(outcome_counts[i]) / static_cast<double>(accepted);
    }
    return odd_parity_probability(p);
}

kernels::ShotModel build_shot_model(const PhotonicCircuit &circuit, const InterferometerUnitary &u,
                                    const NoiseParams &noise) {
    kernels::ShotModel model;
    model.n_pairs = circuit.num_qubits();
    model.n_outcomes = 1 << model.n_pairs;
    model.transmittance = noise.transmittance;
    model.indistinguishability = noise.indistinguishability;

    const auto amps = fock_evolve(u, circuit.input);
    double acc = 0.0;
    for (const auto &[pattern, amp] : amps) {
        acc += std::norm(amp);
        model.interfering_cdf.push_back(acc);
        model.interfering_outcome.push_back(circuit.rule.outcome(pattern));
    }

    const int m = u.modes();
    for (int in_mode : circuit.input.photon_modes()) {
        std::vector<double> cdf(static_cast<std::size_t>(m));
        double c = 0.0;
        for (int out = 0; out < m; ++out) {
            c += std::norm(u(out, in_mode));
            cdf[static_cast<std::size_t>(out)] = c;
        }
        model.photon_cdf.push_back(std::move(cdf));
    }
    model.mode_pair.assign(static_cast<std::size_t>(m), -1);
    model.mode_bit.assign(static_cast<std::size_t>(m), 0);
    for (int q = 0; q < model.n_pairs; ++q) {
        const auto &pair = circuit.rule.rail_pairs[static_cast<std::size_t>(q)];
        model.mode_pair[static_cast<std::size_t>(pair[0])] = q;
        model.mode_pair[static_cast<std::size_t>(pair[1])] = q;
        model.mode_bit[static_cast<std::size_t>(pair[1])] = 1;
    }
    return model;
}

ShotBatch sample_shots(const PhotonicCircuit &circuit, const NoiseParams &noise, long shots,
                       std::uint64_t rng_seed) {
    noise.validate();
    if (shots < 1) {
        throw ArgumentError("shots must be >= 1");
    }
    const auto u = compile_interferometer(circuit.elements, circuit.layout.modes,
                                          derive_seed(rng_seed, kJitterStream), noise.phase_sigma);
    const auto model = build_shot_model(circuit, u, noise);
    const auto tally = kernels::sample_shots_omp(model, shots, derive_seed(rng_seed, kShotStream));
    return {tally.requested, tally.accepted, circuit.num_qubits(), tally.counts};
}

AcceptedDistribution accepted_distribution(const PhotonicCircuit &circuit,
                                           const InterferometerUnitary &u,
                                           const NoiseParams &noise) {
    noise.validate();
    const int n = circuit.num_qubits();
    std::vector<double> interfering(std::size_t{1} << static_cast<unsigned>(n), 0.0);
    std::vector<double> distinguishable(interfering.size(), 0.0);
    if (noise.indistinguishability > 0.0) {
        interfering = postselected_probabilities(circuit, u);
    }
    if (noise.indistinguishability < 1.0) {
        for (const auto &[pattern, p] : distinguishable_distribution(u, circuit.input)) {
            const int o = circuit.rule.outcome(pattern);
            if (o >= 0) {
                distinguishable[static_cast<std::size_t>(o)] += p;
            }
        }
    }
    AcceptedDistribution out;
    out.probabilities.resize(interfering.size());
    double total = 0.0;
    for (std::size_t i = 0; i < interfering.size(); ++i) {
        out.probabilities[i] = noise.indistinguishability * interfering[i] +
                               (1.0 - noise.indistinguishability) * distinguishable[i];
        total += out.probabilities[i];
    }
    if (total > 0.0) {
        for (auto &p : out.probabilities) {
            p /= total;
        }
    }
    out.acceptance = total * std::pow(noise.transmittance, circuit.input.photons());
    return out;
}

ShotBatch sample_accepted(const PhotonicCircuit &circuit, const NoiseParams &noise,
                          long accepted_shots, std::uint64_t rng_seed) {
    if (accepted_shots < 1) {
        throw ArgumentError("shots must be >= 1");
    }
    const auto u = compile_interferometer(circuit.elements, circuit.layout.modes,
                                          derive_seed(rng_seed, kJitterStream), noise.phase_sigma);
    const auto dist = accepted_distribution(circuit, u, noise);
    if (dist.acceptance <= 0.0) {
        throw ArgumentError("postselection can never succeed under this noise model");
    }
    std::mt19937_64 gen(derive_seed(rng_seed, kMultinomialStream));
    ShotBatch batch;
    batch.n_qubits = circuit.num_qubits();
    batch.accepted = accepted_shots;
    batch.outcome_counts.assign(dist.probabilities.size(), 0);
    long remaining = accepted_shots;
    double mass = 1.0;
    for (std::size_t i = 0; i + 1 < dist.probabilities.size() && remaining > 0; ++i) {
        const double p = mass > 0.0 ? std::clamp(dist.probabilities[i] / mass, 0.0, 1.0) : 0.0;
        std::binomial_distribution<long> bin(remaining, p);
        const long k = bin(gen);
        batch.outcome_counts[i] = k;
        remaining -= k;
        mass -= dist.probabilities[i];
    }
    batch.outcome_counts.back() += remaining;
    if (dist.acceptance >= 1.0) {
        batch.requested = accepted_shots;
    } else {
        std::negative_binomial_distribution<long> failures(accepted_shots, dist.acceptance);
        batch.requested = accepted_shots + failures(gen);
    }
    return batch;
}

void to_json(nlohmann::json &j, const NoiseParams &n) {
    j = {{"brightness", n.brightness},
         {"indistinguishability", n.indistinguishability},
         {"g2", n.g2},
         {"transmittance", n.transmittance},
         {"phase_sigma", n.phase_sigma}};
}

void from_json(const nlohmann::json &j, NoiseParams &n) {
    n.brightness = j.value("brightness", 1.0);
    n.indistinguishability = j.value("indistinguishability", 1.0);
    n.g2 = j.value("g2", 0.0);
    n.transmittance = j.value("transmittance", 1.0);
    n.phase_sigma = j.value("phase_sigma", 0.0);
    n.validate();
}

void to_json(nlohmann::json &j, const ShotBatch &b) {
    nlohmann::json counts = nlohmann::json::object();
    for (std::size_t i = 0; i < b.outcome_counts.size(); ++i) {
        counts[outcome_label(i, b.n_qubits)] = b.outcome_counts[i];
    }
    j = {{"requested", b.requested},
         {"accepted", b.accepted},
         {"n_qubits", b.n_qubits},
         {"outcome_counts", counts}};
}

void from_json(const nlohmann::json &j, ShotBatch &b) {
    b.requested = j.at("requested").get<long>();
    b.accepted = j.at("accepted").get<long>();
    b.n_qubits = j.at("n_qubits").get<int>();
    b.outcome_counts.assign(std::size_t{1} << static_cast<unsigned>(b.n_qubits), 0);
    long total = 0;
    for (std::size_t i = 0; i < b.outcome_counts.size(); ++i) {
        b.outcome_counts[i] = j.at("outcome_counts").value(outcome_label(i, b.n_qubits), 0L);
        total += b.outcome_counts[i];
    }
    if (b.accepted > b.requested || total != b.accepted) {
        throw ConfigError("inconsistent ShotBatch counts");
    }
}

} // namespace pqnn
