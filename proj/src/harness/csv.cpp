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

#include "pqnn/harness/csv.hpp"

#include <fstream>

#include <fmt/format.h>

#include "pqnn/error.hpp"

namespace pqnn {

std::string format_number(double v) { return fmt::format("{}", v); }

std::string trace_csv(std::span<const TrainTrace> traces, std::span<const int> trials) {
    if (traces.size() != trials.size()) {
        throw ArgumentError("one trial label per trace required");
    }
    std::string out = "iteration,loss,accuracy,trial,model,backend,shots,batch_size,seed\n";
    for (std::size_t k = 0; k < traces.size(); ++k) {
        const auto &t = traces[k];
        for (const auto &r : t.records) {
            out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.iteration, format_number(r.loss),
                               format_number(r.accuracy), trials[k], to_string(t.model), t.backend,
                               t.shots, t.batch_size, t.seed);
        }
    }
    return out;
}

namespace {
std::string spread(const Moments &m) {
    return m.has_spread ? fmt::format("{},{},{}", format_number(m.std), format_number(m.std_nm1),
                                      format_number(m.ci95))
                        : std::string("0,,");
}
} // namespace

std::string statistics_csv(const RunStatistics &stats) {
    std::string out = "iteration,n,loss_mean,loss_std,loss_std_nm1,loss_ci95,"
                      "accuracy_mean,accuracy_std,accuracy_std_nm1,accuracy_ci95\n";
    for (std::size_t i = 0; i < stats.iterations.size(); ++i) {
        out += fmt::format("{},{},{},{},{},{}\n", stats.iterations[i], stats.n,
                           format_number(stats.loss[i].mean), spread(stats.loss[i]),
                           format_number(stats.accuracy[i].mean), spread(stats.accuracy[i]));
    }
    return out;
}

std::string ed_csv(std::span<const EDRow> rows) {
    std::string out = "model,d,n,gamma,ed,normalized_ed,seed\n";
    for (const auto &r : rows) {
        out += fmt::format("{},{},{},{},{},{},{}\n", r.model, r.d, format_number(r.n),
                           format_number(r.gamma), format_number(r.ed),
                           format_number(r.normalized_ed), r.seed);
    }
    return out;
}

void write_text(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << content;
}

} // namespace pqnn
