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

#include "pqnn/harness/experiment.hpp"

#include <algorithm>
#include <exception>
#include <fstream>

#include <fmt/format.h>
#include <omp.h>
#include <spdlog/spdlog.h>

#include "pqnn/error.hpp"
#include "pqnn/harness/svg.hpp"
#include "pqnn/photonic/cnot.hpp"
#include "pqnn/photonic/throughput.hpp"
#include "pqnn/rng.hpp"

#ifndef PQNN_DEFAULT_IRIS
#define PQNN_DEFAULT_IRIS "data/iris.csv"
#endif

namespace pqnn {

namespace {

constexpr std::array<std::pair<ExperimentKind, const char *>, 6> kNames{{
    {ExperimentKind::XorCompare, "xor_compare"},
    {ExperimentKind::IrisBatchCompare, "iris_batch_compare"},
    {ExperimentKind::ShotSweep, "shot_sweep"},
    {ExperimentKind::EdTable, "ed_table"},
    {ExperimentKind::Throughput, "throughput"},
    {ExperimentKind::PlatformCompare, "platform_compare"},
}};

PlotSeries curve(const SeriesResult &s, bool loss) {
    PlotSeries p;
    p.label = s.name;
    const auto &m = loss ? s.stats.loss : s.stats.accuracy;
    for (std::size_t i = 0; i < m.size(); ++i) {
        p.x.push_back(s.stats.iterations[i]);
        p.mean.push_back(m[i].mean);
        p.std.push_back(m[i].std);
    }
    return p;
}

std::string moments_cells(const Moments &m) {
    if (!m.has_spread) {
        return fmt::format("{},0,,", format_number(m.mean));
    }
    return fmt::format("{},{},{},{}", format_number(m.mean), format_number(m.std),
                       format_number(m.std_nm1), format_number(m.ci95));
}

nlohmann::json moments_json(const Moments &m) {
    nlohmann::json j = {{"n", m.n}, {"mean", m.mean}, {"std", m.std}};
    if (m.has_spread) {
        j["std_nm1"] = m.std_nm1;
        j["ci95"] = m.ci95;
    }
    return j;
}

class Writer {
  public:
    Writer(const ExperimentConfig &cfg, ExperimentReport &report)
        : dir_(cfg.out_dir / to_string(cfg.experiment)), enabled_(cfg.write_files),
          report_(report) {}

    void operator()(const std::string &file, const std::string &content) {
        if (!enabled_) {
            return;
        }
        const auto path = dir_ / file;
        write_text(path, content);
        report_.files.push_back(path);
    }

  private:
    std::filesystem::path dir_;
    bool enabled_;
    ExperimentReport &report_;
};

void emit_training(const ExperimentConfig &cfg, ExperimentReport &report, Writer &write) {
    for (const auto &s : report.series) {
        write(s.name + ".csv", trace_csv(s.traces, s.trials));
        write(s.name + "_stats.csv", statistics_csv(s.stats));
        PlotSpec plot{s.name + " loss", "iteration", "cross-entropy loss", false, 0.0, false,
                      {curve(s, true)}};
        write(s.name + ".svg", render_svg(plot));
    }
    PlotSpec loss{to_string(cfg.experiment) + ": loss", "iteration", "cross-entropy loss",
                  false, std::log(2.0), true, {}};
    PlotSpec acc{to_string(cfg.experiment) + ": accuracy", "iteration", "accuracy", false, 0.0,
                 false, {}};
    if (cfg.experiment != ExperimentKind::ShotSweep) {
        for (const auto &s : report.series) {
            loss.series.push_back(curve(s, true));
            acc.series.push_back(curve(s, false));
        }
        write("loss.svg", render_svg(loss));
        write("accuracy.svg", render_svg(acc));
    }
}

void emit_shot_summary(const ExperimentConfig &cfg, ExperimentReport &report, Writer &write) {
    std::string csv = "model,shots,n,loss_mean,loss_std,loss_std_nm1,loss_ci95,"
                      "accuracy_mean,accuracy_std,accuracy_std_nm1,accuracy_ci95\n";
    PlotSpec loss{"final loss vs shots", "shots", "cross-entropy loss", true, std::log(2.0), true, {}};
    PlotSpec acc{"final accuracy vs shots", "shots", "accuracy", true, 0.0, false, {}};
    PlotSpec spread{"run-to-run std vs shots", "shots", "std across runs", true, 0.0, false, {}};
    for (const auto model : cfg.models) {
        PlotSeries l{to_string(model), {}, {}, {}};
        PlotSeries a{to_string(model), {}, {}, {}};
        PlotSeries sl{to_string(model) + " loss", {}, {}, {}};
        PlotSeries sa{to_string(model) + " accuracy", {}, {}, {}};
        for (const auto &s : report.series) {
            if (s.traces.empty() || s.traces.front().model != model) {
                continue;
            }
            csv += fmt::format("{},{},{},{},{}\n", to_string(model), s.shots, s.stats.n,
                               moments_cells(s.stats.final_loss),
                               moments_cells(s.stats.final_accuracy));
            const auto x = static_cast<double>(s.shots);
            l.x.push_back(x);
            l.mean.push_back(s.stats.final_loss.mean);
            l.std.push_back(s.stats.final_loss.ci95);
            a.x.push_back(x);
            a.mean.push_back(s.stats.final_accuracy.mean);
            a.std.push_back(s.stats.final_accuracy.ci95);
            sl.x.push_back(x);
            sl.mean.push_back(s.stats.final_loss.std);
            sa.x.push_back(x);
            sa.mean.push_back(s.stats.final_accuracy.std);
        }
        loss.series.push_back(l);
        acc.series.push_back(a);
        spread.series.push_back(sl);
        spread.series.push_back(sa);
    }
    write("summary.csv", csv);
    write("summary_loss.svg", render_svg(loss));
    write("summary_accuracy.svg", render_svg(acc));
    write("summary_std.svg", render_svg(spread));
}

Dataset iris_for(const ExperimentConfig &cfg) { return load_iris(cfg.iris_path, cfg.iris_normalization); }

void run_ed_table(const ExperimentConfig &cfg, ExperimentReport &report, Writer &write) {
    EDConfig ed = cfg.ed;
    if (cfg.ed_inputs == EdInputs::Iris) {
        ed.inputs = iris_for(cfg);
    }
    PlotSpec plot{"effective dimension convergence", "n", "normalized effective dimension", true,
                  0.0, false, {}};
    for (const auto model : cfg.models) {
        const int d = parameter_count(model);
        PlotSeries series{to_string(model), {}, {}, {}};
        for (int t = 0; t < cfg.trials; ++t) {
            ed.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(t));
            const auto fishers = sample_fishers(model, ed);
            const double value = effective_dimension(fishers, ed.n, ed.gamma);
            report.ed_rows.push_back(
                {to_string(model), d, ed.n, ed.gamma, value, normalized_ed(value, d), ed.seed});
            if (t == 0) {
                for (const double n : cfg.ed_n_grid) {
                    const double v = effective_dimension(fishers, n, ed.gamma);
                    report.ed_curve.push_back(
                        {to_string(model), d, n, ed.gamma, v, normalized_ed(v, d), ed.seed});
                    series.x.push_back(n);
                    series.mean.push_back(normalized_ed(v, d));
                }
            }
        }
        plot.series.push_back(series);
    }
    write("ed.csv", ed_csv(report.ed_rows));
    write("ed_convergence.csv", ed_csv(report.ed_curve));
    write("ed_convergence.svg", render_svg(plot));
}

void run_throughput(ExperimentReport &report, Writer &write) {
    report.throughput = {
        {"photonic_80MHz_T0.022", net_shot_rate(80e6, 0.022, kCnotSuccessProbability),
         "80 MHz source, 2.2% transmittance, CNOT success 1/9"},
        {"photonic_80MHz_T0.022_brightness0.55",
         net_shot_rate(80e6, 0.022, kCnotSuccessProbability, 0.55),
         "as above with source brightness 0.55 folded in"},
        {"photonic_320MHz_T0.27", net_shot_rate(320e6, 0.27, kCnotSuccessProbability),
         "320 MHz source, 27% transmittance, CNOT success 1/9"},
        {"gate_model_100ns_x4_no_overhead", gate_model_shot_rate(100e-9, 4, 0.0),
         "four sequential 100 ns gates, no readout/reset overhead"},
    };
    std::string csv = "scenario,rate_hz,detail\n";
    for (const auto &r : report.throughput) {
        csv += fmt::format("{},{},\"{}\"\n", r.scenario, format_number(r.rate_hz), r.detail);
    }
    write("throughput.csv", csv);
}

} // namespace

std::string to_string(ExperimentKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string &name) {
    for (const auto &[k, n] : kNames) {
        if (name == n) {
            return k;
        }
    }
    throw ConfigError("unknown experiment '" + name + "'");
}

std::filesystem::path default_iris_path() { return PQNN_DEFAULT_IRIS; }

void ExperimentConfig::validate() const {
    if (trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    const bool trains = experiment != ExperimentKind::EdTable &&
                        experiment != ExperimentKind::Throughput;
    if (trains && models.empty()) {
        throw ConfigError("experiment needs at least one model");
    }
    if (experiment == ExperimentKind::ShotSweep &&
        (shots.empty() || std::any_of(shots.begin(), shots.end(), [](long s) { return s < 1; }))) {
        throw ConfigError("shot_sweep needs shot counts >= 1");
    }
    if (experiment == ExperimentKind::IrisBatchCompare &&
        (batch_sizes.empty() ||
         std::any_of(batch_sizes.begin(), batch_sizes.end(), [](int b) { return b < 1; }))) {
        throw ConfigError("iris_batch_compare needs batch sizes >= 1");
    }
    const bool needs_iris = experiment == ExperimentKind::IrisBatchCompare ||
                            experiment == ExperimentKind::ShotSweep ||
                            experiment == ExperimentKind::PlatformCompare ||
                            (experiment == ExperimentKind::EdTable && ed_inputs == EdInputs::Iris);
    if (needs_iris && !std::filesystem::exists(iris_path)) {
        throw ConfigError("Iris file not found: " + iris_path.string());
    }
    if (noise) {
        noise->validate();
    }
    if (experiment == ExperimentKind::EdTable) {
        ed.validate();
    }
}

ExperimentConfig default_config(ExperimentKind kind) {
    ExperimentConfig c;
    c.experiment = kind;
    switch (kind) {
    case ExperimentKind::XorCompare:
        c.models = {ModelKind::QNN2, ModelKind::ANN2};
        c.trials = 10;
        break;
    case ExperimentKind::IrisBatchCompare:
        c.models = {ModelKind::QNN6, ModelKind::ANN6};
        c.trials = 100;
        break;
    case ExperimentKind::ShotSweep:
        c.models = {ModelKind::QNN2};
        c.trials = 10;
        break;
    case ExperimentKind::EdTable:
        c.models = {ModelKind::QNN2, ModelKind::ANN2, ModelKind::QNN6, ModelKind::ANN6};
        c.trials = 5;
        break;
    case ExperimentKind::Throughput:
        c.trials = 1;
        break;
    case ExperimentKind::PlatformCompare:
        c.models = {ModelKind::QNN2, ModelKind::ANN2};
        c.trials = 100;
        c.train.monitor_on_backend = true;
        break;
    }
    return c;
}

const SeriesResult &ExperimentReport::find(const std::string &name) const {
    for (const auto &s : series) {
        if (s.name == name) {
            return s;
        }
    }
    throw ArgumentError("no series named " + name);
}

SeriesResult run_trials(const std::string &name, ModelKind kind, const Dataset &data,
                        const TrainConfig &base, int trials, std::uint64_t seed,
                        std::vector<std::string> &warnings) {
    if (trials < 1) {
        throw ConfigError("trials must be >= 1");
    }
    base.validate(kind, data);
    std::vector<std::optional<TrainTrace>> slots(static_cast<std::size_t>(trials));
    std::vector<std::string> errors(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < trials; ++t) {
        const auto i = static_cast<std::size_t>(t);
        try {
            TrainConfig cfg = base;
            cfg.seed = derive_seed(seed, static_cast<std::uint64_t>(t));
            slots[i] = train(kind, data, cfg);
        } catch (const std::exception &e) {
            errors[i] = e.what();
        }
    }
    SeriesResult s;
    s.name = name;
    s.shots = backend_shots(base.backend);
    for (int t = 0; t < trials; ++t) {
        const auto i = static_cast<std::size_t>(t);
        if (slots[i]) {
            s.trials.push_back(t);
            s.traces.push_back(std::move(*slots[i]));
        } else {
            auto msg = fmt::format("{}: trial {} failed ({})", name, t, errors[i]);
            spdlog::warn("{}", msg);
            warnings.push_back(std::move(msg));
        }
    }
    if (s.traces.empty()) {
        throw std::runtime_error(name + ": every trial failed");
    }
    if (static_cast<int>(s.traces.size()) < trials) {
        auto msg = fmt::format("{}: statistics over n = {} of {} trials", name, s.traces.size(), trials);
        spdlog::warn("{}", msg);
        warnings.push_back(std::move(msg));
    }
    s.stats = summarize(s.traces);
    return s;
}

ExperimentReport run_experiment(const ExperimentConfig &cfg) {
    cfg.validate();
    ExperimentReport report;
    report.kind = cfg.experiment;
    Writer write(cfg, report);
    const NoiseParams noise = cfg.noise.value_or(NoiseParams::ascella());

    auto series = [&](const std::string &name, ModelKind kind, const Dataset &data,
                      TrainConfig train_cfg, std::uint64_t stream) {
        if (!is_quantum(kind)) {
            train_cfg.backend = ExactBackend{};
        }
        report.series.push_back(run_trials(name, kind, data, train_cfg, cfg.trials,
                                           derive_seed(cfg.seed, stream), report.warnings));
    };

    switch (cfg.experiment) {
    case ExperimentKind::XorCompare: {
        const auto data = gen_xor(cfg.xor_per_cluster, cfg.xor_sigma, cfg.data_seed);
        for (const auto m : cfg.models) {
            series(to_string(m), m, data, cfg.train, 0);
        }
        emit_training(cfg, report, write);
        break;
    }
    case ExperimentKind::IrisBatchCompare: {
        const auto data = iris_for(cfg);
        for (const auto m : cfg.models) {
            for (const int b : cfg.batch_sizes) {
                TrainConfig t = cfg.train;
                t.batch_size = b;
                // Same seeds for both batch sizes so runs differ only in batching.
                series(fmt::format("{}_batch{}", to_string(m), b), m, data, t, 0);
            }
        }
        emit_training(cfg, report, write);
        break;
    }
    case ExperimentKind::ShotSweep: {
        const auto data = iris_for(cfg);
        for (const auto m : cfg.models) {
            for (const long shots : cfg.shots) {
                TrainConfig t = cfg.train;
                t.backend = PhotonicBackend{noise, shots};
                series(fmt::format("{}_shots{}", to_string(m), shots), m, data, t, 0);
            }
        }
        emit_training(cfg, report, write);
        emit_shot_summary(cfg, report, write);
        break;
    }
    case ExperimentKind::PlatformCompare: {
        const auto data = iris_for(cfg);
        for (const auto m : cfg.models) {
            if (!is_quantum(m)) {
                series(to_string(m) + "_exact", m, data, cfg.train, 0);
                continue;
            }
            TrainConfig photonic = cfg.train;
            photonic.backend = PhotonicBackend{noise, cfg.photonic_shots};
            series(to_string(m) + "_photonic", m, data, photonic, 0);
            TrainConfig gate = cfg.train;
            gate.backend = SampledBackend{cfg.gate_noise_shots, cfg.depolarizing};
            series(to_string(m) + "_gate-noise", m, data, gate, 0);
        }
        emit_training(cfg, report, write);
        break;
    }
    case ExperimentKind::EdTable:
        run_ed_table(cfg, report, write);
        break;
    case ExperimentKind::Throughput:
        run_throughput(report, write);
        break;
    }
    nlohmann::json summary = report_summary(report);
    nlohmann::json config_json = cfg;
    write("summary.json", summary.dump(2) + "\n");
    write("config.json", config_json.dump(2) + "\n");
    return report;
}

nlohmann::json report_summary(const ExperimentReport &report) {
    nlohmann::json j;
    j["experiment"] = to_string(report.kind);
    j["series"] = nlohmann::json::array();
    for (const auto &s : report.series) {
        j["series"].push_back({{"name", s.name},
                               {"shots", s.shots},
                               {"padded", s.stats.padded},
                               {"final_loss", moments_json(s.stats.final_loss)},
                               {"final_accuracy", moments_json(s.stats.final_accuracy)}});
    }
    if (!report.ed_rows.empty()) {
        j["ed"] = nlohmann::json::array();
        for (const auto &r : report.ed_rows) {
            j["ed"].push_back({{"model", r.model},
                               {"ed", r.ed},
                               {"normalized_ed", r.normalized_ed},
                               {"seed", r.seed}});
        }
    }
    if (!report.throughput.empty()) {
        j["throughput"] = nlohmann::json::object();
        for (const auto &r : report.throughput) {
            j["throughput"][r.scenario] = r.rate_hz;
        }
    }
    j["warnings"] = report.warnings;
    return j;
}

void to_json(nlohmann::json &j, const ExperimentConfig &c) {
    std::vector<std::string> models;
    for (const auto m : c.models) {
        models.push_back(to_string(m));
    }
    j = {{"experiment", to_string(c.experiment)},
         {"models", models},
         {"train", c.train},
         {"trials", c.trials},
         {"seed", c.seed},
         {"out", c.out_dir.string()},
         {"iris_path", c.iris_path.string()},
         {"iris_normalization", c.iris_normalization == IrisNormalization::Max ? "max" : "minmax"},
         {"xor", {{"n_per_cluster", c.xor_per_cluster}, {"sigma", c.xor_sigma}, {"seed", c.data_seed}}},
         {"shots", c.shots},
         {"batch_sizes", c.batch_sizes},
         {"photonic_shots", c.photonic_shots},
         {"gate_noise_shots", c.gate_noise_shots},
         {"depolarizing", c.depolarizing},
         {"ed",
          {{"n", c.ed.n},
           {"gamma", c.ed.gamma},
           {"n_theta", c.ed.n_theta},
           {"n_data", c.ed.n_data},
           {"inputs", c.ed_inputs == EdInputs::Iris ? "iris" : "uniform"},
           {"n_grid", c.ed_n_grid}}}};
    if (c.noise) {
        j["noise"] = *c.noise;
    }
}

void from_json(const nlohmann::json &j, ExperimentConfig &c) {
    c = default_config(experiment_kind_from_string(j.at("experiment").get<std::string>()));
    if (j.contains("models")) {
        c.models.clear();
        for (const auto &m : j.at("models")) {
            c.models.push_back(model_kind_from_string(m.get<std::string>()));
        }
    }
    if (j.contains("train")) {
        const bool monitor = c.train.monitor_on_backend;
        c.train = j.at("train").get<TrainConfig>();
        if (!j.at("train").contains("monitor_on_backend")) {
            c.train.monitor_on_backend = monitor;
        }
    }
    c.trials = j.value("trials", c.trials);
    c.seed = j.value("seed", c.seed);
    if (j.contains("noise")) {
        c.noise = j.at("noise").get<NoiseParams>();
    }
    if (j.contains("out")) {
        c.out_dir = j.at("out").get<std::string>();
    }
    if (j.contains("iris_path")) {
        c.iris_path = j.at("iris_path").get<std::string>();
    }
    if (j.contains("iris_normalization")) {
        const auto n = j.at("iris_normalization").get<std::string>();
        if (n != "max" && n != "minmax") {
            throw ConfigError("iris_normalization must be max or minmax");
        }
        c.iris_normalization = n == "max" ? IrisNormalization::Max : IrisNormalization::MinMax;
    }
    if (j.contains("xor")) {
        const auto &x = j.at("xor");
        c.xor_per_cluster = x.value("n_per_cluster", c.xor_per_cluster);
        c.xor_sigma = x.value("sigma", c.xor_sigma);
        c.data_seed = x.value("seed", c.data_seed);
    }
    c.shots = j.value("shots", c.shots);
    c.batch_sizes = j.value("batch_sizes", c.batch_sizes);
    c.photonic_shots = j.value("photonic_shots", c.photonic_shots);
    c.gate_noise_shots = j.value("gate_noise_shots", c.gate_noise_shots);
    c.depolarizing = j.value("depolarizing", c.depolarizing);
    if (j.contains("ed")) {
        const auto &e = j.at("ed");
        c.ed.n = e.value("n", c.ed.n);
        c.ed.gamma = e.value("gamma", c.ed.gamma);
        c.ed.n_theta = e.value("n_theta", c.ed.n_theta);
        c.ed.n_data = e.value("n_data", c.ed.n_data);
        if (e.contains("inputs")) {
            const auto in = e.at("inputs").get<std::string>();
            if (in != "iris" && in != "uniform") {
                throw ConfigError("ed.inputs must be iris or uniform");
            }
            c.ed_inputs = in == "iris" ? EdInputs::Iris : EdInputs::Uniform;
        }
        c.ed_n_grid = e.value("n_grid", c.ed_n_grid);
    }
}

ExperimentConfig load_experiment_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("config " + path.string() + ": " + e.what());
    }
    return j.get<ExperimentConfig>();
}

} // namespace pqnn
