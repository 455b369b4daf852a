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

#include "pqnn/harness/backend.hpp"

#include <spdlog/spdlog.h>

#include "pqnn/error.hpp"
#include "pqnn/rng.hpp"

namespace pqnn {

namespace {

class LocalHandle final : public BackendHandle {
  public:
    LocalHandle(std::string name, Backend backend)
        : name_(std::move(name)), backend_(std::move(backend)) {}

    std::string name() const override { return name_; }
    std::optional<Backend> local_backend() const override { return backend_; }

    std::string submit(ModelKind kind, const std::vector<double> &params,
                       const std::vector<std::array<double, 2>> &inputs,
                       std::uint64_t seed) override {
        const ModelSpec spec{kind, params, backend_};
        spec.validate();
        JobResult r;
        r.probabilities.reserve(inputs.size());
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            r.probabilities.push_back(predict(spec, inputs[i], derive_seed(seed, i)));
        }
        auto id = name_ + "-" + std::to_string(submitted_.size());
        submitted_.push_back(id);
        results_[id] = std::move(r);
        return id;
    }

    JobStatus poll(const std::string &job_id) const override {
        if (!results_.contains(job_id)) {
            throw ArgumentError("unknown job " + job_id);
        }
        return JobStatus::Completed;
    }

    JobResult collect(const std::string &job_id) override {
        const auto it = results_.find(job_id);
        if (it == results_.end()) {
            throw ArgumentError("unknown job " + job_id);
        }
        JobResult r = std::move(it->second);
        results_.erase(it);
        return r;
    }

  private:
    std::string name_;
    Backend backend_;
    std::map<std::string, JobResult> results_;
};

// Accepts jobs but never executes them; exercises the job lifecycle.
class RemoteStub final : public BackendHandle {
  public:
    std::string name() const override { return "remote-stub"; }
    std::optional<Backend> local_backend() const override { return std::nullopt; }

    std::string submit(ModelKind, const std::vector<double> &,
                       const std::vector<std::array<double, 2>> &, std::uint64_t) override {
        auto id = "remote-" + std::to_string(submitted_.size());
        submitted_.push_back(id);
        return id;
    }

    JobStatus poll(const std::string &) const override { return JobStatus::Unsupported; }

    JobResult collect(const std::string &job_id) override {
        return {JobStatus::Unsupported, {}, "remote execution is not implemented (job " + job_id + ")"};
    }
};

} // namespace

std::string to_string(JobStatus status) {
    return status == JobStatus::Completed ? "completed" : "unsupported";
}

std::unique_ptr<BackendHandle> backend_descriptor(const std::string &name,
                                                  const BackendOptions &options) {
    if (name == "exact") {
        return std::make_unique<LocalHandle>(name, ExactBackend{});
    }
    if (name == "sampled") {
        return std::make_unique<LocalHandle>(name, SampledBackend{options.shots, 0.0});
    }
    if (name == "gate-noise") {
        return std::make_unique<LocalHandle>(name,
                                             SampledBackend{options.shots, options.depolarizing});
    }
    if (name == "photonic") {
        options.noise.validate();
        return std::make_unique<LocalHandle>(name, PhotonicBackend{options.noise, options.shots});
    }
    if (name == "remote-stub") {
        return std::make_unique<RemoteStub>();
    }
    throw ConfigError("unknown backend '" + name + "'");
}

JobResult run_job(BackendHandle &backend, ModelKind kind, const std::vector<double> &params,
                  const std::vector<std::array<double, 2>> &inputs, std::uint64_t seed) {
    const auto id = backend.submit(kind, params, inputs, seed);
    const auto status = backend.poll(id);
    auto result = backend.collect(id);
    if (status != JobStatus::Completed) {
        spdlog::warn("backend {} job {}: {}", backend.name(), id, to_string(status));
    }
    return result;
}

} // namespace pqnn
