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

#include <span>
#include <vector>

#include "pqnn/training/train.hpp"

namespace pqnn {

/// Mean, Bessel-corrected std, std / sqrt(n - 1) and the 95% CI half-width
/// 1.96 std / sqrt(n). The last two are undefined (has_spread false) for n = 1.
struct Moments {
    int n = 0;
    double mean = 0.0;
    double std = 0.0;
    double std_nm1 = 0.0;
    double ci95 = 0.0;
    bool has_spread = false;
};

[[nodiscard]] Moments moments(std::span<const double> values);

struct RunStatistics {
    int n = 0;
    /// True when some traces were shorter and were padded with their final record.
    bool padded = false;
    std::vector<int> iterations;
    std::vector<Moments> loss;
    std::vector<Moments> accuracy;
    /// Over the per-trace means of the last five records.
    Moments final_loss;
    Moments final_accuracy;
};

/// Pointwise statistics over traces; throws ArgumentError for no traces.
[[nodiscard]] RunStatistics summarize(std::span<const TrainTrace> traces, int window = 5);

} // namespace pqnn
