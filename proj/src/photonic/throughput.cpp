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

#include "pqnn/photonic/throughput.hpp"

#include "pqnn/error.hpp"

namespace pqnn {

double net_shot_rate(double rep_rate_hz, double transmittance, double gate_success,
                     std::optional<double> brightness_factor) {
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!(rep_rate_hz >= 0.0) || !unit(transmittance) || !unit(gate_success)) {
        throw ArgumentError("net_shot_rate: factor out of range");
    }
    double rate = rep_rate_hz * transmittance * gate_success;
    if (brightness_factor) {
        if (!unit(*brightness_factor)) {
            throw ArgumentError("net_shot_rate: brightness out of range");
        }
        rate *= *brightness_factor;
    }
    return rate;
}

double gate_model_shot_rate(double gate_time_s, int n_gates, double per_shot_overhead_s) {
    if (!(gate_time_s > 0.0) || n_gates < 1 || !(per_shot_overhead_s >= 0.0)) {
        throw ArgumentError("gate_model_shot_rate: bad arguments");
    }
    return 1.0 / (gate_time_s * n_gates + per_shot_overhead_s);
}

} // namespace pqnn
