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

#include <optional>

namespace pqnn {

/**
 * Accepted-shot rate of a heralded photonic circuit: repetition rate times
 * end-to-end transmittance times gate success probability. Source brightness
 * is only folded in when given.
 */
[[nodiscard]] double net_shot_rate(double rep_rate_hz, double transmittance, double gate_success,
                                   std::optional<double> brightness_factor = std::nullopt);

/**
 * Shot rate of a gate-model device running `n_gates` sequential gates of
 * `gate_time_s` each plus a per-shot overhead (readout, reset, latency).
 * There is no default overhead.
 */
[[nodiscard]] double gate_model_shot_rate(double gate_time_s, int n_gates,
                                          double per_shot_overhead_s);

} // namespace pqnn
