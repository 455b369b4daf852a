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

#include <catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "pqnn/error.hpp"
#include "pqnn/models/ann.hpp"
#include "pqnn/models/model.hpp"

using namespace pqnn;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;

// Hidden layer as W x followed by the output row v, written out by hand.
double ann6_oracle(const std::array<double, 6> &p, double x0, double x1) {
    const double w[2][2] = {{p[0], p[1]}, {p[2], p[3]}};
    double h[2];
    for (int j = 0; j < 2; ++j) {
        h[j] = oracle::logistic(w[j][0] * x0 + w[j][1] * x1);
    }
    return oracle::logistic(p[4] * h[0] + p[5] * h[1]);
}
} // namespace

TEST_CASE("parameter counts are matched", "[models]") {
    CHECK(parameter_count(ModelKind::QNN2) == 2);
    CHECK(parameter_count(ModelKind::ANN2) == 2);
    CHECK(parameter_count(ModelKind::QNN6) == 6);
    CHECK(parameter_count(ModelKind::ANN6) == 6);
    CHECK(circuit_for(ModelKind::QNN2).weight_slots == 2);
    CHECK(circuit_for(ModelKind::QNN6).weight_slots == 6);
    CHECK(is_quantum(ModelKind::QNN6));
    CHECK_FALSE(is_quantum(ModelKind::ANN2));
    CHECK_THROWS_AS(circuit_for(ModelKind::ANN6), ConfigError);
    for (auto k : {ModelKind::QNN2, ModelKind::QNN6, ModelKind::ANN2, ModelKind::ANN6}) {
        CHECK(model_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(model_kind_from_string("QNN9"), ConfigError);
}

TEST_CASE("ANN2 forward pass", "[models]") {
    const std::vector<double> zero{0, 0};
    const std::vector<double> x{0.3, 0.9};
    CHECK(ann2_forward(zero, x) == 0.5);
    const std::vector<double> w{1, 0};
    const std::vector<double> x1{1, 0.42};
    CHECK_THAT(ann2_forward(w, x1), WithinAbs(1.0 / (1.0 + std::exp(-1.0)), 1e-15));
    CHECK_THAT(ann2_forward(w, x1), WithinAbs(0.7311, 1e-4));

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> big(-50, 50), feat(0, 1);
    for (int i = 0; i < 200; ++i) {
        const std::vector<double> p{big(rng), big(rng)}, f{feat(rng), feat(rng)};
        const double y = ann2_forward(p, f);
        CHECK(y >= 0.0);
        CHECK(y <= 1.0);
    }
    const std::vector<double> mid{3, -2};
    const double y = ann2_forward(mid, x);
    CHECK(y > 0.0);
    CHECK(y < 1.0);
}

TEST_CASE("ANN6 forward pass matches a hand-rolled evaluation", "[models]") {
    const std::vector<double> zero(6, 0.0);
    const std::vector<double> x{0.7, 0.1};
    CHECK(ann6_forward(zero, x) == 0.5);

    std::mt19937_64 rng(4);
    std::normal_distribution<double> g(0.0, 2.0);
    std::uniform_real_distribution<double> feat(0, 1);
    for (int i = 0; i < 10; ++i) {
        std::array<double, 6> p{};
        for (auto &v : p) {
            v = g(rng);
        }
        const double x0 = feat(rng), x1 = feat(rng);
        const std::vector<double> f{x0, x1};
        CHECK_THAT(ann6_forward(p, f), WithinAbs(ann6_oracle(p, x0, x1), 1e-12));

        // Swap hidden units together with their output weights.
        const std::array<double, 6> swapped{p[2], p[3], p[0], p[1], p[5], p[4]};
        CHECK_THAT(ann6_forward(swapped, f), WithinAbs(ann6_forward(p, f), 1e-15));
    }
}

TEST_CASE("ANN outputs vary smoothly", "[models]") {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> g;
    for (int i = 0; i < 20; ++i) {
        std::vector<double> p(6);
        for (auto &v : p) {
            v = g(rng);
        }
        const std::vector<double> x{0.4, 0.6};
        const double y = ann6_forward(p, x);
        for (std::size_t k = 0; k < 6; ++k) {
            auto q = p;
            q[k] += 1e-7;
            CHECK(std::abs(ann6_forward(q, x) - y) < 1e-6);
        }
        const std::vector<double> xs{0.4 + 1e-7, 0.6};
        CHECK(std::abs(ann6_forward(p, xs) - y) < 1e-6);
    }
}

TEST_CASE("QNN predictions on the exact backend", "[models]") {
    ModelSpec m{ModelKind::QNN2, {0, 0}, ExactBackend{}};
    const std::vector<double> origin{0, 0};
    CHECK_THAT(predict(m, origin), WithinAbs(0.0, 1e-15));

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> feat(0, 1), ang(0, 2 * kPi);
    for (int i = 0; i < 50; ++i) {
        const double x0 = feat(rng), x1 = feat(rng);
        const std::vector<double> x{x0, x1};
        m.kind = ModelKind::QNN2;
        m.params = {ang(rng), ang(rng)};
        const double ref2 =
            oracle::parity(oracle::qnn2_state(x0, x1, m.params[0], m.params[1], 2 * kPi));
        CHECK_THAT(predict(m, x), WithinAbs(ref2, 1e-12));
        CHECK(predict(m, x) == predict(m, x));

        std::array<double, 6> w{};
        for (auto &v : w) {
            v = ang(rng);
        }
        m.kind = ModelKind::QNN6;
        m.params.assign(w.begin(), w.end());
        CHECK_THAT(predict(m, x), WithinAbs(oracle::parity(oracle::qnn6_state(x0, x1, w, 2 * kPi)),
                                            1e-12));
    }
}

TEST_CASE("sampled QNN predictions track exact ones", "[models]") {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> feat(0, 1), ang(0, 2 * kPi);
    int good = 0, total = 0;
    for (int b = 0; b < 20; ++b) {
        const std::vector<double> x{feat(rng), feat(rng)};
        const std::vector<double> w{ang(rng), ang(rng)};
        const double exact = predict(ModelSpec{ModelKind::QNN2, w, ExactBackend{}}, x);
        const ModelSpec sampled{ModelKind::QNN2, w, SampledBackend{100000, 0.0}};
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const double p = predict(sampled, x, seed);
            good += std::abs(p - exact) <= 0.01 ? 1 : 0;
            ++total;
            CHECK(p == predict(sampled, x, seed));
        }
    }
    CHECK(good >= 0.95 * total);
}

TEST_CASE("photonic backend predictions", "[models]") {
    const std::vector<double> x{0.25, 0.55};
    const std::vector<double> w{0.9, 2.7};
    const double exact = predict(ModelSpec{ModelKind::QNN2, w, ExactBackend{}}, x);
    const ModelSpec ideal{ModelKind::QNN2, w, PhotonicBackend{NoiseParams::noiseless(), 100000}};
    CHECK_THAT(predict(ideal, x, 1), WithinAbs(exact, 0.01));
    CHECK(predict(ideal, x, 1) == predict(ideal, x, 1));
    const ModelSpec ascella{ModelKind::QNN2, w, PhotonicBackend{NoiseParams::ascella(), 100000}};
    const double noisy = predict(ascella, x, 1);
    CHECK(noisy >= 0.0);
    CHECK(noisy <= 1.0);
}

TEST_CASE("backend and kind mismatches are configuration errors", "[models]") {
    const std::vector<double> x{0.1, 0.2};
    CHECK_THROWS_AS(predict(ModelSpec{ModelKind::ANN2, {0, 0}, SampledBackend{}}, x), ConfigError);
    CHECK_THROWS_AS(predict(ModelSpec{ModelKind::ANN6, std::vector<double>(6, 0.0),
                                      PhotonicBackend{}},
                            x),
                    ConfigError);
    CHECK_THROWS_AS(predict(ModelSpec{ModelKind::QNN6, {0, 0}, ExactBackend{}}, x), ConfigError);
    CHECK_NOTHROW(predict(ModelSpec{ModelKind::ANN2, {0, 0}, ExactBackend{}}, x));
    CHECK(backend_shots(ExactBackend{}) == 0);
    CHECK(backend_shots(SampledBackend{300, 0.0}) == 300);
}

TEST_CASE("decision thresholds and ties", "[models]") {
    CHECK(decision_from_probability(0.5) == Label::B);
    CHECK(decision_from_probability(0.49) == Label::A);
    CHECK(decision_from_probability(0.7, 0.8) == Label::A);
    const ModelSpec zero{ModelKind::ANN2, {0, 0}, ExactBackend{}};
    const std::vector<double> x{0.6, 0.3};
    CHECK(decision(zero, x) == Label::B);
}

TEST_CASE("exact prediction gradients", "[models]") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> feat(0, 1), ang(0, 2 * kPi);
    for (auto kind : {ModelKind::QNN2, ModelKind::QNN6, ModelKind::ANN2, ModelKind::ANN6}) {
        for (int t = 0; t < 10; ++t) {
            std::vector<double> p(static_cast<std::size_t>(parameter_count(kind)));
            for (auto &v : p) {
                v = ang(rng) - kPi;
            }
            const std::vector<double> x{feat(rng), feat(rng)};
            std::vector<double> grad(p.size());
            const double y = predict_exact_with_gradient(kind, p, x, kDefaultEncodingScale, grad);
            CHECK_THAT(y, WithinAbs(predict_exact(kind, p, x), 1e-14));
            for (std::size_t k = 0; k < p.size(); ++k) {
                auto hi = p, lo = p;
                hi[k] += 1e-5;
                lo[k] -= 1e-5;
                const double fd = (predict_exact(kind, hi, x) - predict_exact(kind, lo, x)) / 2e-5;
                CHECK_THAT(grad[k], WithinAbs(fd, 1e-7));
            }
        }
    }
}

TEST_CASE("model JSON round trip", "[models]") {
    const std::vector<ModelSpec> specs{
        {ModelKind::QNN2, {0.1, 0.2}, ExactBackend{}},
        {ModelKind::QNN6, {1, 2, 3, 4, 5, 6}, SampledBackend{1000, 0.01}},
        {ModelKind::QNN2, {0.5, 0.6}, PhotonicBackend{NoiseParams::ascella(), 300}},
        {ModelKind::ANN6, {-1, 1, -2, 2, 0.5, 0.25}, ExactBackend{}},
    };
    for (const auto &s : specs) {
        const nlohmann::json j = s;
        const auto back = nlohmann::json::parse(j.dump()).get<ModelSpec>();
        CHECK(back.kind == s.kind);
        CHECK(back.params == s.params);
        CHECK(back.backend == s.backend);
        CHECK(back.encoding_scale == s.encoding_scale);
    }
    nlohmann::json bad = specs[0];
    bad["params"] = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(bad.get<ModelSpec>(), ConfigError);
}
