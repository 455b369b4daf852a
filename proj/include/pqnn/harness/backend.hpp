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

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pqnn/models/model.hpp"

namespace pqnn {

enum class JobStatus { Completed, Unsupported };

[[nodiscard]] std::string to_string(JobStatus status);

struct JobResult {
    JobStatus status = JobStatus::Completed;
    std::vector<double> probabilities; // P(class B) per submitted input
    std::string message;
};

struct BackendOptions {
    long shots = 100000;
    NoiseParams noise = NoiseParams::ascella();
    double depolarizing = 0.0;
};

/**
 * Job interface shared by local simulators and the remote stub:
 * submit a batch of inputs, poll its status, collect the result.
 */
class BackendHandle {
  public:
    virtual ~BackendHandle() = default;

    [[nodiscard]] virtual std::string name() const = 0;
    /// The simulator behind a local handle; empty for remote ones.
    [[nodiscard]] virtual std::optional<Backend> local_backend() const = 0;

    virtual std::string submit(ModelKind kind, const std::vector<double> &params,
                               const std::vector<std::array<double, 2>> &inputs,
                               std::uint64_t seed) = 0;
    [[nodiscard]] virtual JobStatus poll(const std::string &job_id) const = 0;
    virtual JobResult collect(const std::string &job_id) = 0;

    /// Every job id submitted so far, in order.
    [[nodiscard]] const std::vector<std::string> &submitted() const { return submitted_; }

  protected:
    std::vector<std::string> submitted_;
};

/// Resolves exact, sampled, gate-noise, photonic and remote-stub.
/// Unknown names throw ConfigError.
[[nodiscard]] std::unique_ptr<BackendHandle> backend_descriptor(const std::string &name,
                                                                const BackendOptions &options = {});

/// submit -> poll -> collect in one call.
[[nodiscard]] JobResult run_job(BackendHandle &backend, ModelKind kind,
                                const std::vector<double> &params,
                                const std::vector<std::array<double, 2>> &inputs,
                                std::uint64_t seed);

} // namespace pqnn
