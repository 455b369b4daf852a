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

#include "pqnn/harness/statistics.hpp"

#include <algorithm>
#include <cmath>

#include "pqnn/error.hpp"

namespace pqnn {

Moments moments(std::span<const double> values) {
    if (values.empty()) {
        throw ArgumentError("moments of an empty sample");
    }
    Moments m;
    m.n = static_cast<int>(values.size());
    for (const double v : values) {
        m.mean += v;
    }
    m.mean /= static_cast<double>(m.n);
    if (m.n > 1) {
        double ss = 0.0;
        for (const double v : values) {
            ss += (v - m.mean) * (v - m.mean);
        }
        m.std = std::sqrt(ss / static_cast<double>(m.n - 1));
        m.std_nm1 = m.std / std::sqrt(static_cast<double>(m.n - 1));
        m.ci95 = 1.96 * m.std / std::sqrt(static_cast<double>(m.n));
        m.has_spread = true;
    }
    return m;
}

RunStatistics summarize(std::span<const TrainTrace> traces, int window) {
    if (traces.empty()) {
        throw ArgumentError("summarize needs at least one trace");
    }
    RunStatistics s;
    s.n = static_cast<int>(traces.size());
    std::size_t length = 0;
    for (const auto &t : traces) {
        if (t.records.empty()) {
            throw ArgumentError("trace has no records");
        }
        length = std::max(length, t.records.size());
    }
    const auto *longest = &traces.front();
    for (const auto &t : traces) {
        if (t.records.size() != length) {
            s.padded = true;
        } else {
            longest = &t;
        }
    }
    std::vector<double> loss(traces.size());
    std::vector<double> acc(traces.size());
    for (std::size_t i = 0; i < length; ++i) {
        for (std::size_t k = 0; k < traces.size(); ++k) {
            const auto &r = traces[k].records;
            const auto &rec = i < r.size() ? r[i] : r.back();
            loss[k] = rec.loss;
            acc[k] = rec.accuracy;
        }
        s.iterations.push_back(longest->records[i].iteration);
        s.loss.push_back(moments(loss));
        s.accuracy.push_back(moments(acc));
    }
    for (std::size_t k = 0; k < traces.size(); ++k) {
        loss[k] = traces[k].converged_loss(window);
        acc[k] = traces[k].converged_accuracy(window);
    }
    s.final_loss = moments(loss);
    s.final_accuracy = moments(acc);
    return s;
}

} // namespace pqnn
