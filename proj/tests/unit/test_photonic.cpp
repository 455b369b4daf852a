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

#include <map>
#include <numbers>
#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "pqnn/core/circuit.hpp"
#include "pqnn/core/readout.hpp"
#include "pqnn/error.hpp"
#include "pqnn/photonic/cnot.hpp"
#include "pqnn/photonic/compile.hpp"
#include "pqnn/photonic/fock.hpp"
#include "pqnn/photonic/permanent.hpp"
#include "pqnn/photonic/sampler.hpp"
#include "pqnn/photonic/throughput.hpp"

using namespace pqnn;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kPi = std::numbers::pi;

CMatrix random_matrix(int k, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix m(k, k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            m(i, j) = {g(rng), g(rng)};
        }
    }
    return m;
}

// Haar-ish random unitary from the QR factorization of a Gaussian matrix.
CMatrix random_unitary(int k, std::mt19937_64 &rng) {
    Eigen::HouseholderQR<CMatrix> qr(random_matrix(k, rng));
    return qr.householderQ();
}

// Output amplitudes by multiplying out prod_k (sum_j U(j, in_k) a_j^dag)|0>.
std::map<std::vector<int>, Complex> polynomial_oracle(const CMatrix &u,
                                                      const std::vector<int> &input) {
    const int m = static_cast<int>(u.rows());
    std::vector<int> photons;
    double in_norm = 1.0;
    for (int mode = 0; mode < m; ++mode) {
        for (int c = 0; c < input[static_cast<std::size_t>(mode)]; ++c) {
            photons.push_back(mode);
            in_norm *= c + 1;
        }
    }
    const int n = static_cast<int>(photons.size());
    std::map<std::vector<int>, Complex> coeff;
    std::vector<int> outs(static_cast<std::size_t>(n), 0);
    while (true) {
        Complex term = 1.0;
        std::vector<int> occ(static_cast<std::size_t>(m), 0);
        for (int k = 0; k < n; ++k) {
            term *= u(outs[static_cast<std::size_t>(k)], photons[static_cast<std::size_t>(k)]);
            ++occ[static_cast<std::size_t>(outs[static_cast<std::size_t>(k)])];
        }
        coeff[occ] += term;
        int pos = 0;
        while (pos < n && ++outs[static_cast<std::size_t>(pos)] == m) {
            outs[static_cast<std::size_t>(pos++)] = 0;
        }
        if (pos == n) {
            break;
        }
    }
    for (auto &[occ, c] : coeff) {
        double fact = 1.0;
        for (int s : occ) {
            for (int i = 2; i <= s; ++i) {
                fact *= i;
            }
        }
        c *= std::sqrt(fact / in_norm);
    }
    return coeff;
}

FockState cnot_input(int control, int target) {
    FockState s{std::vector<int>(6, 0)};
    s.occupations[static_cast<std::size_t>(control)] = 1;
    s.occupations[static_cast<std::size_t>(2 + target)] = 1;
    return s;
}

PhotonicCircuit cnot_only() {
    ParameterizedCircuit c;
    c.n_qubits = 2;
    c.gates = {Gate::cnot(0, 1)};
    const std::vector<double> angles{0.0};
    return compile_with_angles(c, angles);
}

// Global-phase-insensitive comparison of two 2x2 blocks.
double phase_aligned_error(const CMatrix &a, const Complex (&b)[2][2]) {
    Complex overlap = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            overlap += std::conj(b[i][j]) * a(i, j);
        }
    }
    const Complex phase = overlap / std::abs(overlap);
    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            err = std::max(err, std::abs(a(i, j) - phase * b[i][j]));
        }
    }
    return err;
}
} // namespace

TEST_CASE("permanent small cases", "[photonic]") {
    CMatrix one(1, 1);
    one(0, 0) = {0.3, -1.2};
    CHECK(std::abs(permanent(one) - one(0, 0)) < 1e-15);

    CMatrix two(2, 2);
    two << Complex(1, 2), Complex(-0.5, 0), Complex(0.25, 1), Complex(3, -1);
    const Complex expect = two(0, 0) * two(1, 1) + two(0, 1) * two(1, 0);
    CHECK(std::abs(permanent(two) - expect) < 1e-14);

    CHECK_THAT(permanent(CMatrix::Ones(3, 3)).real(), WithinAbs(6.0, 1e-12));
    CHECK(std::abs(permanent(CMatrix(0, 0)) - Complex(1.0)) < 1e-15);
    CHECK_THROWS_AS(permanent(CMatrix::Ones(2, 3)), ArgumentError);
}

TEST_CASE("Ryser permanent matches the permutation sum", "[photonic]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 1 + trial % 6;
        const CMatrix a = random_matrix(k, rng);
        const Complex ref = oracle::brute_permanent(a, k);
        CHECK(std::abs(permanent(a) - ref) < 1e-9 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("interferometer compilation", "[photonic]") {
    const auto id = compile_interferometer({}, 4);
    CHECK(id.matrix().isApprox(CMatrix::Identity(4, 4)));

    const std::vector<OpticalElement> bs{OpticalElement::beam_splitter(0, 1, 0.5)};
    const auto u = compile_interferometer(bs, 3);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK_THAT(u(0, 0).real(), WithinAbs(r, 1e-15));
    CHECK_THAT(u(0, 1).real(), WithinAbs(r, 1e-15));
    CHECK_THAT(u(1, 0).real(), WithinAbs(r, 1e-15));
    CHECK_THAT(u(1, 1).real(), WithinAbs(-r, 1e-15));
    CHECK(std::abs(u(2, 2) - Complex(1.0)) < 1e-15);
    CHECK(std::abs(u(0, 2)) < 1e-15);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<OpticalElement> els;
        for (int e = 0; e < 20; ++e) {
            const int a = static_cast<int>(uni(rng) * 6);
            const int b = (a + 1 + static_cast<int>(uni(rng) * 5)) % 6;
            if (uni(rng) < 0.5) {
                els.push_back(OpticalElement::beam_splitter(a, b, uni(rng)));
            } else {
                els.push_back(OpticalElement::phase_shifter(a, 2 * kPi * uni(rng)));
            }
        }
        CHECK(compile_interferometer(els, 6, std::uint64_t{7}, 0.01).unitarity_error() < 1e-9);
    }

    CHECK_THROWS_AS(compile_interferometer(bs, 1), ArgumentError);
    const std::vector<OpticalElement> bad{OpticalElement::beam_splitter(0, 1, 1.5)};
    CHECK_THROWS_AS(compile_interferometer(bad, 2), ArgumentError);
}

TEST_CASE("phase noise is seeded and has the requested spread", "[photonic]") {
    const std::vector<OpticalElement> ps{OpticalElement::phase_shifter(0, 0.0)};
    const double sigma = 0.001;
    const auto a = compile_interferometer(ps, 1, std::uint64_t{42}, sigma);
    const auto b = compile_interferometer(ps, 1, std::uint64_t{42}, sigma);
    CHECK(a.matrix() == b.matrix());
    CHECK(compile_interferometer(ps, 1, std::uint64_t{42}, 0.0).matrix() ==
          compile_interferometer(ps, 1).matrix());

    const int n = 4000;
    double sum = 0.0, sq = 0.0;
    for (int s = 0; s < n; ++s) {
        const double phase =
            std::arg(compile_interferometer(ps, 1, static_cast<std::uint64_t>(s), sigma)(0, 0));
        sum += phase;
        sq += phase * phase;
    }
    const double mean = sum / n;
    const double sd = std::sqrt(sq / n - mean * mean);
    CHECK(std::abs(mean) < 5 * sigma / std::sqrt(n));
    CHECK_THAT(sd, WithinRel(sigma, 0.05));
}

TEST_CASE("Fock evolution basics", "[photonic]") {
    const FockState in{{1, 0, 2}};
    const auto out = fock_evolve(compile_interferometer({}, 3), in);
    for (const auto &[s, a] : out) {
        CHECK(std::abs(a - (s == in ? Complex(1.0) : Complex(0.0))) < 1e-12);
    }
    CHECK_THROWS_AS(fock_evolve(compile_interferometer({}, 4), FockState{{1, 1, 1, 1}}),
                    CapabilityError);
    CHECK_THROWS_AS(fock_evolve(compile_interferometer({}, 3), FockState{{1, 1}}), ArgumentError);
}

TEST_CASE("Hong-Ou-Mandel dip", "[photonic]") {
    const std::vector<OpticalElement> bs{OpticalElement::beam_splitter(0, 1, 0.5)};
    const auto u = compile_interferometer(bs, 2);
    const FockState in{{1, 1}};
    const auto out = fock_evolve(u, in);
    CHECK(std::abs(out.at(FockState{{1, 1}})) < 1e-15);
    CHECK_THAT(std::norm(out.at(FockState{{2, 0}})), WithinAbs(0.5, 1e-12));
    CHECK_THAT(std::norm(out.at(FockState{{0, 2}})), WithinAbs(0.5, 1e-12));

    CHECK_THAT(mixed_distribution(u, in, 1.0).at(FockState{{1, 1}}), WithinAbs(0.0, 1e-12));
    CHECK_THAT(mixed_distribution(u, in, 0.0).at(FockState{{1, 1}}), WithinAbs(0.5, 1e-12));
    CHECK_THAT(mixed_distribution(u, in, 0.5).at(FockState{{1, 1}}), WithinAbs(0.25, 1e-12));
}

TEST_CASE("Fock amplitudes match the creation-operator expansion", "[photonic]") {
    std::mt19937_64 rng(17);
    const std::vector<std::vector<int>> inputs{{1, 1, 0}, {1, 1, 0}, {2, 0, 0}, {1, 1, 1}, {0, 1, 2}};
    for (int trial = 0; trial < 20; ++trial) {
        const CMatrix u = random_unitary(3, rng);
        for (const auto &occ : inputs) {
            const auto out = fock_evolve(InterferometerUnitary(u), FockState{occ});
            const auto ref = polynomial_oracle(u, occ);
            double total = 0.0;
            for (const auto &[s, a] : out) {
                const auto it = ref.find(s.occupations);
                const Complex expect = it == ref.end() ? Complex(0.0) : it->second;
                CHECK(std::abs(a - expect) < 1e-9);
                total += std::norm(a);
            }
            CHECK_THAT(total, WithinAbs(1.0, 1e-9));
        }
    }
}

TEST_CASE("postselected CNOT block", "[photonic]") {
    const auto cnot = build_postselected_cnot();
    CHECK(cnot.modes == 6);
    for (const auto &e : cnot.elements) {
        if (e.kind == OpticalElement::Kind::BeamSplitter) {
            const bool third = std::abs(e.value - kCnotCouplerReflectivity) < 1e-15;
            const bool half = std::abs(e.value - 0.5) < 1e-15;
            CHECK((third || half));
        }
    }
    const auto u = compile_interferometer(cnot.elements, 6);
    CHECK(u.unitarity_error() < 1e-12);
    const std::array<int, 4> truth{0, 1, 3, 2};
    for (int c = 0; c < 2; ++c) {
        for (int t = 0; t < 2; ++t) {
            const auto out = fock_evolve(u, cnot_input(c, t));
            std::array<Complex, 4> amps{};
            double success = 0.0;
            for (const auto &[s, a] : out) {
                const int o = cnot.rule.outcome(s);
                if (o >= 0) {
                    amps[static_cast<std::size_t>(o)] += a;
                    success += std::norm(a);
                }
            }
            const int expected = truth[static_cast<std::size_t>(2 * c + t)];
            for (int o = 0; o < 4; ++o) {
                CHECK_THAT(std::abs(amps[static_cast<std::size_t>(o)]),
                           WithinAbs(o == expected ? 1.0 / 3.0 : 0.0, 1e-12));
            }
            CHECK_THAT(success, WithinAbs(kCnotSuccessProbability, 1e-12));
        }
    }
}

TEST_CASE("postselection rule", "[photonic]") {
    const PostselectionRule rule{{{0, 1}, {2, 3}}};
    CHECK(rule.outcome(FockState{{1, 0, 1, 0, 0, 0}}) == 0);
    CHECK(rule.outcome(FockState{{0, 1, 1, 0, 0, 0}}) == 2);
    CHECK(rule.outcome(FockState{{0, 1, 0, 1, 0, 0}}) == 3);
    CHECK(rule.outcome(FockState{{1, 1, 0, 0, 0, 0}}) == -1);
    CHECK(rule.outcome(FockState{{1, 0, 1, 0, 1, 0}}) == -1);
    CHECK(rule.outcome(FockState{{2, 0, 0, 0, 0, 0}}) == -1);
}

TEST_CASE("rotations compile to rail blocks equal up to global phase", "[photonic]") {
    const double theta = 0.913;
    const auto rz = rotation_elements(GateKind::Rz, theta, 0, 1);
    REQUIRE(rz.size() == 1);
    CHECK(rz[0].kind == OpticalElement::Kind::PhaseShifter);
    CHECK(rz[0].modes[0] == 1);
    CHECK_THAT(rz[0].value, WithinAbs(theta, 1e-15));

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ang(-2 * kPi, 2 * kPi);
    for (GateKind kind : {GateKind::Rx, GateKind::Ry, GateKind::Rz}) {
        for (int trial = 0; trial < 30; ++trial) {
            const double a = ang(rng);
            const auto u = compile_interferometer(rotation_elements(kind, a, 0, 1), 2);
            Complex gate[2][2];
            rotation_matrix(kind, a, gate);
            CHECK(phase_aligned_error(u.matrix(), gate) < 1e-12);
        }
    }
    CHECK_THROWS_AS(rotation_elements(GateKind::CNOT, 0.0, 0, 1), CapabilityError);
}

TEST_CASE("circuit compilation layout and limits", "[photonic]") {
    ParameterizedCircuit empty;
    empty.n_qubits = 2;
    const auto pc = compile_with_angles(empty, {});
    CHECK(pc.layout.modes == 4);
    CHECK(pc.elements.empty());
    CHECK(pc.input.occupations == std::vector<int>{1, 0, 1, 0});
    CHECK(compile_interferometer(pc.elements, pc.layout.modes).matrix().isApprox(
        CMatrix::Identity(4, 4)));
    const auto amps = postselected_amplitudes(pc, compile_interferometer(pc.elements, 4));
    CHECK(std::abs(amps[0] - Complex(1.0)) < 1e-15);

    const auto q2 = compile_circuit_to_photonics(qnn2_circuit(), std::vector<double>{0.1, 0.2},
                                                 std::vector<double>{0.3, 0.4});
    CHECK(q2.layout.modes == 6);
    CHECK(q2.cnot_count == 1);
    CHECK(q2.layout.modes <= kMaxModes);

    ParameterizedCircuit two_cnots;
    two_cnots.n_qubits = 2;
    two_cnots.gates = {Gate::cnot(0, 1), Gate::cnot(1, 0)};
    CHECK_THROWS_AS(compile_with_angles(two_cnots, std::vector<double>{0, 0}), CapabilityError);

    ParameterizedCircuit wide;
    wide.n_qubits = 4;
    CHECK_THROWS_AS(compile_with_angles(wide, {}), CapabilityError);
}

TEST_CASE("photonic and statevector simulators agree", "[photonic]") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> feat(0.0, 1.0), ang(0.0, 2 * kPi);
    for (const auto &circuit : {qnn2_circuit(), qnn6_circuit()}) {
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> x{feat(rng), feat(rng)};
            std::vector<double> w(static_cast<std::size_t>(circuit.weight_slots));
            for (auto &v : w) {
                v = ang(rng);
            }
            const auto pc = compile_circuit_to_photonics(circuit, x, w);
            const auto u = compile_interferometer(pc.elements, pc.layout.modes);
            const auto amps = postselected_amplitudes(pc, u);
            const auto psi = run_circuit(circuit, x, w);

            // Amplitudes agree with CNOT/3 scaling up to one global phase.
            Complex overlap = 0.0;
            for (std::size_t i = 0; i < 4; ++i) {
                overlap += std::conj(psi[i]) * amps[i];
            }
            CHECK_THAT(std::abs(overlap), WithinAbs(1.0 / 3.0, 1e-8));
            const Complex phase = overlap / std::abs(overlap) / 3.0;
            const auto probs = postselected_probabilities(pc, u);
            double success = 0.0;
            for (double p : probs) {
                success += p;
            }
            CHECK_THAT(success, WithinAbs(kCnotSuccessProbability, 1e-10));
            const auto ref = psi.probabilities();
            for (std::size_t i = 0; i < 4; ++i) {
                CHECK(std::abs(amps[i] - phase * psi[i]) < 1e-8);
                CHECK_THAT(probs[i] / success, WithinAbs(ref[i], 1e-8));
            }
        }
    }
}

TEST_CASE("shot sampling acceptance and loss", "[photonic]") {
    const auto pc = cnot_only();
    const long shots = 200000;
    const auto batch = sample_shots(pc, NoiseParams::noiseless(), shots, 99);
    const double p = kCnotSuccessProbability;
    const double sd = std::sqrt(p * (1 - p) / static_cast<double>(shots));
    CHECK(batch.requested == shots);
    CHECK(std::abs(static_cast<double>(batch.accepted) / static_cast<double>(shots) - p) < 3 * sd);
    // |00> stays |00> through the CNOT.
    CHECK(batch.outcome_counts[0] == batch.accepted);

    NoiseParams dark;
    dark.transmittance = 0.0;
    CHECK(sample_shots(pc, dark, 10000, 1).accepted == 0);
    CHECK_THROWS_AS(sample_shots(pc, NoiseParams::noiseless(), 0, 1), ArgumentError);

    long previous = -1;
    for (double t : {0.1, 0.3, 0.6, 1.0}) {
        NoiseParams n;
        n.transmittance = t;
        const auto b = sample_shots(pc, n, 50000, 5);
        CHECK(b.accepted >= previous);
        previous = b.accepted;
    }
}

TEST_CASE("sampled photonic frequencies match statevector parity", "[photonic]") {
    const auto circuit = qnn2_circuit();
    const std::vector<std::vector<double>> xs{{0.1, 0.7}, {0.45, 0.2}, {0.9, 0.9}};
    const std::vector<double> w{1.3, 4.1};
    for (const auto &x : xs) {
        const auto pc = compile_circuit_to_photonics(circuit, x, w);
        const double exact = class_probability(run_circuit(circuit, x, w));
        const auto accepted = sample_accepted(pc, NoiseParams::noiseless(), 100000, 3);
        CHECK(accepted.accepted == 100000);
        CHECK(accepted.requested >= accepted.accepted);
        CHECK_THAT(accepted.parity_fraction(), WithinAbs(exact, 0.01));

        const auto per_shot = sample_shots(pc, NoiseParams::noiseless(), 100000, 3);
        const double bound =
            4 * std::sqrt(0.25 / static_cast<double>(std::max(1L, per_shot.accepted)));
        CHECK_THAT(per_shot.parity_fraction(), WithinAbs(exact, bound));
    }
}

TEST_CASE("accepted-shot distribution and negative binomial request count", "[photonic]") {
    const auto circuit = qnn2_circuit();
    const std::vector<double> x{0.3, 0.6}, w{0.5, 2.0};
    const auto pc = compile_circuit_to_photonics(circuit, x, w);
    const auto u = compile_interferometer(pc.elements, pc.layout.modes);

    const auto ideal = accepted_distribution(pc, u, NoiseParams::noiseless());
    CHECK_THAT(ideal.acceptance, WithinAbs(kCnotSuccessProbability, 1e-12));
    const auto ref = run_circuit(circuit, x, w).probabilities();
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK_THAT(ideal.probabilities[i], WithinAbs(ref[i], 1e-10));
    }

    NoiseParams lossy;
    lossy.transmittance = 0.5;
    CHECK_THAT(accepted_distribution(pc, u, lossy).acceptance,
               WithinAbs(0.25 * kCnotSuccessProbability, 1e-12));

    const auto ascella = NoiseParams::ascella();
    const auto dist = accepted_distribution(pc, u, ascella);
    double total = 0.0;
    for (double p : dist.probabilities) {
        total += p;
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-12));

    const auto batch = sample_accepted(pc, ascella, 20000, 8);
    long sum = 0;
    for (long c : batch.outcome_counts) {
        sum += c;
    }
    CHECK(sum == 20000);
    const double expected_requested = 20000.0 / dist.acceptance;
    CHECK_THAT(static_cast<double>(batch.requested), WithinRel(expected_requested, 0.05));

    const auto again = sample_accepted(pc, ascella, 20000, 8);
    CHECK(again.outcome_counts == batch.outcome_counts);
    CHECK(again.requested == batch.requested);
}

TEST_CASE("noise parameter validation", "[photonic]") {
    CHECK_NOTHROW(NoiseParams::ascella().validate());
    NoiseParams n;
    n.indistinguishability = 1.2;
    CHECK_THROWS_AS(n.validate(), ArgumentError);
    n = {};
    n.phase_sigma = -0.1;
    CHECK_THROWS_AS(n.validate(), ArgumentError);
    const auto a = NoiseParams::ascella();
    CHECK(a.brightness == 0.55);
    CHECK(a.indistinguishability == 0.86);
    CHECK(a.g2 == 0.00183);
    CHECK(a.transmittance == 0.022);
    CHECK(a.phase_sigma == 0.001);
}

TEST_CASE("photonic JSON round trips", "[photonic]") {
    const auto pc = compile_circuit_to_photonics(qnn6_circuit(), std::vector<double>{0.2, 0.8},
                                                 std::vector<double>{1, 2, 3, 4, 5, 6});
    const nlohmann::json j = pc;
    CHECK(j.get<PhotonicCircuit>() == pc);
    CHECK(nlohmann::json::parse(j.dump()).get<PhotonicCircuit>() == pc);

    const nlohmann::json nj = NoiseParams::ascella();
    CHECK(nj.get<NoiseParams>() == NoiseParams::ascella());

    const auto batch = sample_shots(pc, NoiseParams::noiseless(), 5000, 2);
    const nlohmann::json bj = batch;
    const auto back = bj.get<ShotBatch>();
    CHECK(back.requested == batch.requested);
    CHECK(back.accepted == batch.accepted);
    CHECK(back.outcome_counts == batch.outcome_counts);

    nlohmann::json broken = bj;
    broken["accepted"] = batch.accepted + 1;
    CHECK_THROWS_AS(broken.get<ShotBatch>(), ConfigError);
}

TEST_CASE("net shot rate", "[photonic]") {
    CHECK_THAT(net_shot_rate(80e6, 0.022, 1.0 / 9.0), WithinRel(195555.5556, 1e-9));
    CHECK_THAT(net_shot_rate(320e6, 0.27, 1.0 / 9.0), WithinRel(9.6e6, 1e-12));
    CHECK(net_shot_rate(5e6, 1.0, 1.0) == 5e6);
    CHECK_THAT(net_shot_rate(80e6, 0.022, 1.0 / 9.0, 0.55), WithinRel(195555.5556 * 0.55, 1e-9));
    CHECK_THAT(gate_model_shot_rate(100e-9, 4, 0.0), WithinRel(2.5e6, 1e-12));
    CHECK_THROWS_AS(net_shot_rate(80e6, 1.5, 1.0), ArgumentError);
}
