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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "pqnn/harness/statistics.hpp"
#include "pqnn/training/train.hpp"

namespace pqnn {

/// iteration,loss,accuracy,trial,model,backend,shots,batch_size,seed
/// with one block of rows per trace; `trials[k]` labels trace k.
[[nodiscard]] std::string trace_csv(std::span<const TrainTrace> traces,
                                    std::span<const int> trials);

/// Pointwise statistics: iteration,n,loss_mean,loss_std,loss_std_nm1,
/// loss_ci95,accuracy_mean,accuracy_std,accuracy_std_nm1,accuracy_ci95.
/// Spread columns are left empty when n = 1.
[[nodiscard]] std::string statistics_csv(const RunStatistics &stats);

struct EDRow {
    std::string model;
    int d = 0;
    double n = 0.0;
    double gamma = 1.0;
    double ed = 0.0;
    double normalized_ed = 0.0;
    std::uint64_t seed = 0;
};

/// model,d,n,gamma,ed,normalized_ed,seed
[[nodiscard]] std::string ed_csv(std::span<const EDRow> rows);

/// Shortest decimal that round-trips.
[[nodiscard]] std::string format_number(double v);

/// Writes bytes verbatim, creating parent directories.
void write_text(const std::filesystem::path &path, const std::string &content);

} // namespace pqnn
