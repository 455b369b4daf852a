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

// Serial reference vs OpenMP kernels. Arg(0) is the serial loop, Arg(t > 0)
// the OpenMP loop on t threads.

#include <algorithm>
#include <numbers>
#include <random>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "pqnn/core/circuit.hpp"
#include "pqnn/effdim/fisher.hpp"
#include "pqnn/kernels/fisher_kernels.hpp"
#include "pqnn/kernels/shot_kernels.hpp"
#include "pqnn/photonic/compile.hpp"
#include "pqnn/photonic/sampler.hpp"

using namespace pqnn;

namespace {

kernels::ShotModel qnn6_model() {
    const auto pc = compile_circuit_to_photonics(qnn6_circuit(), std::vector<double>{0.3, 0.8},
                                                 std::vector<double>{0.1, 1.2, 2.3, 3.4, 4.5, 5.6});
    auto noise = NoiseParams::ascella();
    noise.transmittance = 0.5;
    return build_shot_model(pc, compile_interferometer(pc.elements, pc.layout.modes), noise);
}

kernels::FisherTask qnn6_fisher() {
    return [](std::size_t i) {
        std::mt19937_64 rng(i);
        std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
        std::vector<double> theta(static_cast<std::size_t>(parameter_count(ModelKind::QNN6)));
        for (auto &v : theta) {
            v = u(rng);
        }
        return fisher_at(ModelKind::QNN6, theta, 100, i).matrix;
    };
}

void shots(benchmark::State &state) {
    const auto model = qnn6_model();
    const long n = 200000;
    const int threads = static_cast<int>(state.range(0));
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
    for (auto _ : state) {
        auto tally = threads == 0 ? kernels::sample_shots_serial(model, n, 1)
                                  : kernels::sample_shots_omp(model, n, 1);
        benchmark::DoNotOptimize(tally);
    }
    state.SetItemsProcessed(state.iterations() * n);
}

void fisher(benchmark::State &state) {
    const auto task = qnn6_fisher();
    const std::size_t n = 64;
    const int threads = static_cast<int>(state.range(0));
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
    for (auto _ : state) {
        auto out = threads == 0 ? kernels::fisher_batch_serial(n, task)
                                : kernels::fisher_batch_omp(n, task);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

void thread_args(benchmark::internal::Benchmark *b) {
    b->Arg(0);
    for (int t = 1; t <= std::max(4, omp_get_num_procs()); t *= 2) {
        b->Arg(t);
    }
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

} // namespace

BENCHMARK(shots)->Apply(thread_args);
BENCHMARK(fisher)->Apply(thread_args);

BENCHMARK_MAIN();
