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

#include "pqnn/models/model.hpp"

#include <numbers>

#include "pqnn/core/readout.hpp"
#include "pqnn/error.hpp"
#include "pqnn/models/ann.hpp"
#include "pqnn/photonic/compile.hpp"

namespace pqnn {

namespace {
template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};

double exact_qnn(const ParameterizedCircuit &circuit, std::span<const double> angles) {
    return class_probability(evolve(circuit, angles));
}
} // namespace

std::string backend_name(const Backend &backend) {
    return std::visit(Overloaded{[](const ExactBackend &) { return std::string("exact"); },
                                 [](const SampledBackend &b) {
                                     return std::string(b.depolarizing > 0.0 ? "gate-noise"
                                                                             : "sampled");
                                 },
                                 [](const PhotonicBackend &) { return std::string("photonic"); }},
                      backend);
}

long backend_shots(const Backend &backend) {
    return std::visit(Overloaded{[](const ExactBackend &) { return 0L; },
                                 [](const SampledBackend &b) { return b.shots; },
                                 [](const PhotonicBackend &b) { return b.shots; }},
                      backend);
}

bool is_quantum(ModelKind kind) noexcept {
    return kind == ModelKind::QNN2 || kind == ModelKind::QNN6;
}

int parameter_count(ModelKind kind) noexcept {
    return (kind == ModelKind::QNN2 || kind == ModelKind::ANN2) ? 2 : 6;
}

std::string to_string(ModelKind kind) {
    switch (kind) {
    case ModelKind::QNN2:
        return "QNN2";
    case ModelKind::QNN6:
        return "QNN6";
    case ModelKind::ANN2:
        return "ANN2";
    case ModelKind::ANN6:
        return "ANN6";
    }
    return "?";
}

ModelKind model_kind_from_string(const std::string &name) {
    for (auto k : {ModelKind::QNN2, ModelKind::QNN6, ModelKind::ANN2, ModelKind::ANN6}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw ConfigError("unknown model kind '" + name + "'");
}

void ModelSpec::validate() const {
    if (static_cast<int>(params.size()) != parameter_count(kind)) {
        throw ConfigError(to_string(kind) + " needs " + std::to_string(parameter_count(kind)) +
                          " parameters, got " + std::to_string(params.size()));
    }
    if (!is_quantum(kind) && !std::holds_alternative<ExactBackend>(backend)) {
        throw ConfigError("ANN models only run on the exact backend");
    }
    if (backend_shots(backend) < 0 || (!std::holds_alternative<ExactBackend>(backend) &&
                                       backend_shots(backend) < 1)) {
        throw ConfigError("sampled backends need shots >= 1");
    }
}

ParameterizedCircuit circuit_for(ModelKind kind, double encoding_scale) {
    switch (kind) {
    case ModelKind::QNN2:
        return qnn2_circuit(encoding_scale);
    case ModelKind::QNN6:
        return qnn6_circuit(encoding_scale);
    default:
        throw ConfigError(to_string(kind) + " is not a quantum model");
    }
}

double predict_exact(ModelKind kind, std::span<const double> params,
                     std::span<const double> features, double encoding_scale) {
    switch (kind) {
    case ModelKind::ANN2:
        return ann2_forward(params, features);
    case ModelKind::ANN6:
        return ann6_forward(params, features);
    default: {
        const auto circuit = circuit_for(kind, encoding_scale);
        return exact_qnn(circuit, circuit.bind(features, params));
    }
    }
}

double predict_exact_with_gradient(ModelKind kind, std::span<const double> params,
                                   std::span<const double> features, double encoding_scale,
                                   std::span<double> grad_out) {
    if (static_cast<int>(grad_out.size()) != parameter_count(kind)) {
        throw ConfigError("gradient buffer has the wrong length");
    }
    if (kind == ModelKind::ANN2) {
        return ann2_backward(params, features, grad_out);
    }
    if (kind == ModelKind::ANN6) {
        return ann6_backward(params, features, grad_out);
    }
    const auto circuit = circuit_for(kind, encoding_scale);
    auto angles = circuit.bind(features, params);
    const double p = exact_qnn(circuit, angles);
    std::fill(grad_out.begin(), grad_out.end(), 0.0);
    constexpr double kShift = std::numbers::pi / 2.0;
    for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
        const auto &slot = circuit.gates[g].slot;
        if (!slot || slot->source != SlotSource::Weight) {
            continue;
        }
        if (!is_rotation(circuit.gates[g].kind)) {
            throw CapabilityError("parameter shift needs a rotation gate for every weight");
        }
        const double base = angles[g];
        angles[g] = base + kShift;
        const double plus = exact_qnn(circuit, angles);
        angles[g] = base - kShift;
        const double minus = exact_qnn(circuit, angles);
        angles[g] = base;
        grad_out[static_cast<std::size_t>(slot->index)] += 0.5 * (plus - minus);
    }
    return p;
}

double predict_bound(const ModelSpec &model, const ParameterizedCircuit &circuit,
                     std::span<const double> angles, std::uint64_t rng_seed) {
    return std::visit(
        Overloaded{
            [&](const ExactBackend &) { return exact_qnn(circuit, angles); },
            [&](const SampledBackend &b) {
                const double p = depolarized_parity(exact_qnn(circuit, angles), b.depolarizing,
                                                    static_cast<int>(circuit.gates.size()));
                const std::vector<double> dist{1.0 - p, p};
                return sampled_parity(dist, b.shots, rng_seed);
            },
            [&](const PhotonicBackend &b) {
                const auto compiled = compile_with_angles(circuit, angles);
                return sample_accepted(compiled, b.noise, b.shots, rng_seed).parity_fraction();
            }},
        model.backend);
}

double predict(const ModelSpec &model, std::span<const double> features, std::uint64_t rng_seed) {
    model.validate();
    if (!is_quantum(model.kind)) {
        return predict_exact(model.kind, model.params, features, model.encoding_scale);
    }
    const auto circuit = circuit_for(model.kind, model.encoding_scale);
    return predict_bound(model, circuit, circuit.bind(features, model.params), rng_seed);
}

Label decision_from_probability(double p, double threshold) noexcept {
    return p >= threshold ? Label::B : Label::A;
}

Label decision(const ModelSpec &model, std::span<const double> features, double threshold,
               std::uint64_t rng_seed) {
    return decision_from_probability(predict(model, features, rng_seed), threshold);
}

void to_json(nlohmann::json &j, const Backend &b) {
    std::visit(Overloaded{[&](const ExactBackend &) { j = {{"name", "exact"}}; },
                          [&](const SampledBackend &s) {
                              j = {{"name", "sampled"},
                                   {"shots", s.shots},
                                   {"depolarizing", s.depolarizing}};
                          },
                          [&](const PhotonicBackend &p) {
                              j = {{"name", "photonic"}, {"shots", p.shots}, {"noise", p.noise}};
                          }},
               b);
}

void from_json(const nlohmann::json &j, Backend &b) {
    const auto name = j.at("name").get<std::string>();
    if (name == "exact") {
        b = ExactBackend{};
    } else if (name == "sampled" || name == "gate-noise") {
        b = SampledBackend{j.value("shots", 100000L), j.value("depolarizing", 0.0)};
    } else if (name == "photonic") {
        PhotonicBackend p;
        p.shots = j.value("shots", 100000L);
        if (j.contains("noise")) {
            p.noise = j.at("noise").get<NoiseParams>();
        }
        b = p;
    } else {
        throw ConfigError("unknown backend '" + name + "'");
    }
}

void to_json(nlohmann::json &j, const ModelSpec &m) {
    j = {{"kind", to_string(m.kind)},
         {"params", m.params},
         {"backend", m.backend},
         {"encoding_scale", m.encoding_scale}};
}

void from_json(const nlohmann::json &j, ModelSpec &m) {
    m.kind = model_kind_from_string(j.at("kind").get<std::string>());
    m.params = j.at("params").get<std::vector<double>>();
    m.backend = j.contains("backend") ? j.at("backend").get<Backend>() : Backend{ExactBackend{}};
    m.encoding_scale = j.value("encoding_scale", kDefaultEncodingScale);
    m.validate();
}

} // namespace pqnn
