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

#include "pqnn/training/train.hpp"

#include <algorithm>
#include <numbers>
#include <random>

#include "pqnn/error.hpp"
#include "pqnn/rng.hpp"
#include "pqnn/training/gradient.hpp"

namespace pqnn {

namespace {

// Seed streams under a run seed.
enum Stream : std::uint64_t { kInit = 0, kShuffle = 1, kObjective = 2, kMonitor = 3 };

// Consecutive batches over per-epoch shuffles; the last batch of an epoch
// may be short when batch_size does not divide the dataset.
class BatchStream {
  public:
    BatchStream(std::size_t n, std::size_t batch, std::uint64_t seed)
        : n_(n), batch_(batch), seed_(seed) {}

    std::span<const std::size_t> next() {
        if (pos_ >= order_.size()) {
            order_ = shuffle_split_order(n_, derive_seed(seed_, kShuffle, epoch_++));
            pos_ = 0;
        }
        const std::size_t len = std::min(batch_, order_.size() - pos_);
        std::span<const std::size_t> out(order_.data() + pos_, len);
        pos_ += len;
        return out;
    }

  private:
    std::size_t n_;
    std::size_t batch_;
    std::uint64_t seed_;
    std::uint64_t epoch_ = 0;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
};

double tail_mean(const std::vector<TrainRecord> &records, int window, bool loss) {
    if (records.empty()) {
        throw ArgumentError("trace has no records");
    }
    if (window < 1) {
        throw ArgumentError("window must be >= 1");
    }
    const std::size_t w = std::min(records.size(), static_cast<std::size_t>(window));
    double sum = 0.0;
    for (std::size_t i = records.size() - w; i < records.size(); ++i) {
        sum += loss ? records[i].loss : records[i].accuracy;
    }
    return sum / static_cast<double>(w);
}

} // namespace

void TrainConfig::validate(ModelKind kind, const Dataset &data) const {
    if (data.empty()) {
        throw ConfigError("training dataset is empty");
    }
    if (batch_size < 1 || static_cast<std::size_t>(batch_size) > data.size()) {
        throw ConfigError("batch_size must lie in [1, dataset size]");
    }
    if (max_iterations < 0) {
        throw ConfigError("max_iterations must be >= 0");
    }
    if (init && static_cast<int>(init->size()) != parameter_count(kind)) {
        throw ConfigError("init vector has the wrong length for " + to_string(kind));
    }
    if (const auto *c = std::get_if<CobylaConfig>(&optimizer)) {
        if (!(c->rho_begin > 0.0) || !(c->rho_end > 0.0) || c->rho_end > c->rho_begin) {
            throw ConfigError("COBYLA needs 0 < rho_end <= rho_begin");
        }
    }
    if (const auto *a = std::get_if<AdamConfig>(&optimizer)) {
        if (!(a->lr > 0.0) || a->beta1 < 0.0 || a->beta1 >= 1.0 || a->beta2 < 0.0 ||
            a->beta2 >= 1.0 || !(a->eps > 0.0)) {
            throw ConfigError("invalid Adam hyperparameters");
        }
    }
    ModelSpec probe{kind, std::vector<double>(static_cast<std::size_t>(parameter_count(kind))),
                    backend, encoding_scale};
    probe.validate();
}

double TrainTrace::converged_loss(int window) const { return tail_mean(records, window, true); }

double TrainTrace::converged_accuracy(int window) const {
    return tail_mean(records, window, false);
}

const std::vector<double> &TrainTrace::final_params() const {
    if (records.empty()) {
        throw ArgumentError("trace has no records");
    }
    return records.back().params;
}

std::vector<double> initial_params(ModelKind kind, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const bool quantum = is_quantum(kind);
    std::uniform_real_distribution<double> dist(quantum ? 0.0 : -1.0,
                                                quantum ? 2.0 * std::numbers::pi : 1.0);
    std::vector<double> p(static_cast<std::size_t>(parameter_count(kind)));
    for (auto &v : p) {
        v = dist(rng);
    }
    return p;
}

TrainTrace train(ModelKind kind, const Dataset &data, const TrainConfig &config) {
    config.validate(kind, data);
    const std::uint64_t seed = config.seed;
    ModelSpec spec{kind,
                   config.init ? *config.init : initial_params(kind, derive_seed(seed, kInit)),
                   config.backend, config.encoding_scale};

    TrainTrace trace;
    trace.model = kind;
    trace.backend = backend_name(config.backend);
    trace.shots = backend_shots(config.backend);
    trace.batch_size = config.batch_size;
    trace.seed = seed;
    trace.records.reserve(static_cast<std::size_t>(config.max_iterations) + 1);

    auto record = [&](int iteration) {
        const auto e = evaluate(spec, data, !config.monitor_on_backend,
                                derive_seed(seed, kMonitor, static_cast<std::uint64_t>(iteration)));
        trace.records.push_back({iteration, e.loss, e.accuracy, spec.params});
    };
    record(0);
    if (config.max_iterations == 0) {
        return trace;
    }

    BatchStream batches(data.size(), static_cast<std::size_t>(config.batch_size), seed);
    if (const auto *cobyla = std::get_if<CobylaConfig>(&config.optimizer)) {
        CobylaConfig cfg = *cobyla;
        cfg.max_evals = config.max_iterations;
        int k = 0;
        const Objective objective = [&](std::span<const double> x) {
            ++k;
            spec.params.assign(x.begin(), x.end());
            const double loss = batch_loss(spec, data, batches.next(),
                                           derive_seed(seed, kObjective, static_cast<std::uint64_t>(k)));
            record(k);
            return loss;
        };
        const auto x0 = spec.params;
        (void)cobyla_minimize(objective, x0, cfg);
    } else {
        const auto &adam = std::get<AdamConfig>(config.optimizer);
        AdamState state;
        for (int k = 1; k <= config.max_iterations; ++k) {
            const auto lg = loss_gradient(spec, data, batches.next(),
                                          derive_seed(seed, kObjective, static_cast<std::uint64_t>(k)));
            adam_step(state, spec.params, lg.gradient, adam);
            record(k);
        }
    }
    return trace;
}

void to_json(nlohmann::json &j, const TrainConfig &c) {
    if (const auto *cob = std::get_if<CobylaConfig>(&c.optimizer)) {
        j["optimizer"] = {{"name", "cobyla"}, {"rho_begin", cob->rho_begin}, {"rho_end", cob->rho_end}};
    } else {
        const auto &a = std::get<AdamConfig>(c.optimizer);
        j["optimizer"] = {{"name", "adam"},   {"lr", a.lr},   {"beta1", a.beta1},
                          {"beta2", a.beta2}, {"eps", a.eps}};
    }
    j["batch_size"] = c.batch_size;
    j["max_iterations"] = c.max_iterations;
    j["backend"] = c.backend;
    j["seed"] = c.seed;
    if (c.init) {
        j["init"] = *c.init;
    }
    j["encoding_scale"] = c.encoding_scale;
    j["monitor_on_backend"] = c.monitor_on_backend;
}

void from_json(const nlohmann::json &j, TrainConfig &c) {
    c = TrainConfig{};
    if (j.contains("optimizer")) {
        const auto &o = j.at("optimizer");
        const auto name = o.at("name").get<std::string>();
        if (name == "cobyla") {
            CobylaConfig cob;
            cob.rho_begin = o.value("rho_begin", cob.rho_begin);
            cob.rho_end = o.value("rho_end", cob.rho_end);
            c.optimizer = cob;
        } else if (name == "adam") {
            AdamConfig a;
            a.lr = o.value("lr", a.lr);
            a.beta1 = o.value("beta1", a.beta1);
            a.beta2 = o.value("beta2", a.beta2);
            a.eps = o.value("eps", a.eps);
            c.optimizer = a;
        } else {
            throw ConfigError("unknown optimizer '" + name + "'");
        }
    }
    c.batch_size = j.value("batch_size", c.batch_size);
    c.max_iterations = j.value("max_iterations", c.max_iterations);
    if (j.contains("backend")) {
        c.backend = j.at("backend").get<Backend>();
    }
    c.seed = j.value("seed", c.seed);
    if (j.contains("init")) {
        c.init = j.at("init").get<std::vector<double>>();
    }
    c.encoding_scale = j.value("encoding_scale", c.encoding_scale);
    c.monitor_on_backend = j.value("monitor_on_backend", c.monitor_on_backend);
}

} // namespace pqnn
