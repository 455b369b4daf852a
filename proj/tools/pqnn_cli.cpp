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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "pqnn/data/dataset.hpp"
#include "pqnn/error.hpp"
#include "pqnn/harness/experiment.hpp"
#include "pqnn/harness/svg.hpp"
#include "pqnn/photonic/cnot.hpp"
#include "pqnn/photonic/throughput.hpp"

using namespace pqnn;

namespace {

struct Common {
    std::uint64_t seed = 1;
    int trials = 0; // 0: experiment default
    std::string out = "results";
    std::string config;
};

void add_common(CLI::App *cmd, Common &c) {
    cmd->add_option("--seed", c.seed, "Master seed");
    cmd->add_option("--trials", c.trials, "Independent runs (default depends on experiment)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--out", c.out, "Output directory");
    cmd->add_option("--config", c.config, "JSON experiment config")->check(CLI::ExistingFile);
}

ExperimentConfig make_config(ExperimentKind kind, const Common &c, const CLI::App &cmd) {
    ExperimentConfig cfg = c.config.empty() ? default_config(kind) : load_experiment_config(c.config);
    if (cfg.experiment != kind) {
        throw ConfigError("config file is for experiment " + to_string(cfg.experiment));
    }
    if (c.config.empty() || cmd.count("--seed") > 0) {
        cfg.seed = c.seed;
    }
    if (c.trials > 0) {
        cfg.trials = c.trials;
    }
    if (c.config.empty() || cmd.count("--out") > 0) {
        cfg.out_dir = c.out;
    }
    return cfg;
}

void print_report(const ExperimentReport &report) {
    std::cout << report_summary(report).dump(2) << "\n";
    for (const auto &f : report.files) {
        spdlog::info("wrote {}", f.string());
    }
}

std::vector<ModelKind> parse_models(const std::vector<std::string> &names) {
    std::vector<ModelKind> out;
    for (const auto &n : names) {
        out.push_back(model_kind_from_string(n));
    }
    return out;
}

Backend make_backend(const std::string &name, long shots, double depolarizing) {
    if (name == "exact") {
        return ExactBackend{};
    }
    if (name == "sampled") {
        return SampledBackend{shots, 0.0};
    }
    if (name == "gate-noise") {
        return SampledBackend{shots, depolarizing};
    }
    if (name == "photonic") {
        return PhotonicBackend{NoiseParams::ascella(), shots};
    }
    throw ConfigError("unknown backend '" + name + "'");
}

const std::map<std::string, ExperimentKind> &figures() {
    static const std::map<std::string, ExperimentKind> m{
        {"fig2e", ExperimentKind::EdTable},         {"fig4", ExperimentKind::XorCompare},
        {"fig5", ExperimentKind::ShotSweep},        {"fig6", ExperimentKind::IrisBatchCompare},
        {"fig7", ExperimentKind::PlatformCompare},  {"throughput", ExperimentKind::Throughput},
    };
    return m;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Photonic and gate-based quantum neural network simulator"};
    app.require_subcommand(1);

    // gen-data
    auto *gen = app.add_subcommand("gen-data", "Write an XOR or Iris-subset dataset as CSV");
    std::string gen_kind = "xor";
    std::string gen_out = "xor.csv";
    int gen_n = kXorPerCluster;
    double gen_sigma = kXorSigma;
    std::uint64_t gen_seed = 1;
    std::string gen_iris = default_iris_path().string();
    bool gen_minmax = false;
    gen->add_option("kind", gen_kind, "xor or iris")->check(CLI::IsMember({"xor", "iris"}));
    gen->add_option("--out", gen_out, "Output CSV path");
    gen->add_option("--n-per-cluster", gen_n, "XOR points per cluster")->check(CLI::PositiveNumber);
    gen->add_option("--sigma", gen_sigma, "XOR cluster std")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", gen_seed, "XOR seed");
    gen->add_option("--iris", gen_iris, "Standard Iris CSV");
    gen->add_flag("--minmax", gen_minmax, "Min-max instead of max normalization");

    // train
    auto *tr = app.add_subcommand("train", "Train one model for several seeded trials");
    Common tr_common;
    add_common(tr, tr_common);
    std::string tr_model = "QNN2";
    std::string tr_data = "xor";
    std::string tr_opt = "cobyla";
    std::string tr_backend = "exact";
    int tr_batch = 1;
    int tr_iters = 200;
    long tr_shots = 100000;
    double tr_depol = 0.01;
    double tr_lr = 0.1;
    bool tr_monitor = false;
    tr->add_option("--model", tr_model, "QNN2, QNN6, ANN2 or ANN6");
    tr->add_option("--dataset", tr_data, "xor, iris or a x0,x1,label CSV");
    tr->add_option("--optimizer", tr_opt, "cobyla or adam")->check(CLI::IsMember({"cobyla", "adam"}));
    tr->add_option("--backend", tr_backend, "exact, sampled, gate-noise or photonic");
    tr->add_option("--batch-size", tr_batch, "Samples per update")->check(CLI::PositiveNumber);
    tr->add_option("--iterations", tr_iters, "Optimizer iterations")->check(CLI::NonNegativeNumber);
    tr->add_option("--shots", tr_shots, "Shots per circuit evaluation")->check(CLI::PositiveNumber);
    tr->add_option("--depolarizing", tr_depol, "Gate-noise strength");
    tr->add_option("--lr", tr_lr, "Adam learning rate");
    tr->add_flag("--monitor-on-backend", tr_monitor, "Record trace loss with the training backend");

    // ed
    auto *ed = app.add_subcommand("ed", "Normalized effective dimension table");
    Common ed_common;
    add_common(ed, ed_common);
    std::vector<std::string> ed_models;
    double ed_n = 1e6;
    double ed_gamma = 1.0;
    int ed_theta = 100;
    int ed_data = 100;
    std::string ed_inputs = "iris";
    ed->add_option("--models", ed_models, "Models to evaluate");
    ed->add_option("--n", ed_n, "Effective sample count");
    ed->add_option("--gamma", ed_gamma, "Gamma in (0, 1]");
    ed->add_option("--n-theta", ed_theta, "Parameter samples");
    ed->add_option("--n-data", ed_data, "Inputs per parameter sample");
    ed->add_option("--inputs", ed_inputs, "iris or uniform")->check(CLI::IsMember({"iris", "uniform"}));

    // sweep-shots
    auto *sw = app.add_subcommand("sweep-shots", "Final loss/accuracy vs shots on the photonic backend");
    Common sw_common;
    add_common(sw, sw_common);
    std::vector<long> sw_shots;
    std::vector<std::string> sw_models;
    sw->add_option("--shots", sw_shots, "Shot counts");
    sw->add_option("--models", sw_models, "Models");

    // throughput
    auto *th = app.add_subcommand("throughput", "Net shot-rate arithmetic");
    double th_rate = 80e6;
    double th_t = 0.022;
    double th_success = kCnotSuccessProbability;
    std::optional<double> th_brightness;
    std::string th_out;
    th->add_option("--rep-rate", th_rate, "Source repetition rate in Hz");
    th->add_option("--transmittance", th_t, "End-to-end transmittance");
    th->add_option("--gate-success", th_success, "Heralded gate success probability");
    th->add_option("--brightness", th_brightness, "Optional source brightness factor");
    th->add_option("--out", th_out, "Also write the scenario table under this directory");

    // reproduce
    auto *rep = app.add_subcommand("reproduce", "Run the experiment behind one figure");
    Common rep_common;
    add_common(rep, rep_common);
    std::string figure;
    std::vector<std::string> fig_names;
    for (const auto &[k, v] : figures()) {
        fig_names.push_back(k);
    }
    rep->add_option("figure", figure, "fig2e, fig4, fig5, fig6, fig7 or throughput")
        ->required()
        ->check(CLI::IsMember(fig_names));

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const Dataset d =
                gen_kind == "xor"
                    ? gen_xor(gen_n, gen_sigma, gen_seed)
                    : load_iris(gen_iris, gen_minmax ? IrisNormalization::MinMax : IrisNormalization::Max);
            write_dataset_csv(d, gen_out);
            spdlog::info("wrote {} rows to {}", d.size(), gen_out);
        } else if (tr->parsed()) {
            Dataset data;
            if (tr_data == "xor") {
                data = gen_xor();
            } else if (tr_data == "iris") {
                data = load_iris(default_iris_path());
            } else {
                data = read_dataset_csv(tr_data);
            }
            const auto kind = model_kind_from_string(tr_model);
            TrainConfig cfg;
            if (!tr_common.config.empty()) {
                std::ifstream in(tr_common.config);
                cfg = nlohmann::json::parse(in).get<TrainConfig>();
            } else {
                cfg.batch_size = tr_batch;
                cfg.max_iterations = tr_iters;
                cfg.backend = make_backend(tr_backend, tr_shots, tr_depol);
                cfg.monitor_on_backend = tr_monitor;
                if (tr_opt == "adam") {
                    AdamConfig a;
                    a.lr = tr_lr;
                    cfg.optimizer = a;
                }
            }
            std::vector<std::string> warnings;
            const auto s = run_trials(tr_model + "_" + backend_name(cfg.backend), kind, data, cfg,
                                      tr_common.trials > 0 ? tr_common.trials : 1, tr_common.seed,
                                      warnings);
            const std::filesystem::path dir = std::filesystem::path(tr_common.out) / "train";
            write_text(dir / (s.name + ".csv"), trace_csv(s.traces, s.trials));
            write_text(dir / (s.name + "_stats.csv"), statistics_csv(s.stats));
            PlotSeries curve{s.name, {}, {}, {}};
            for (std::size_t i = 0; i < s.stats.iterations.size(); ++i) {
                curve.x.push_back(s.stats.iterations[i]);
                curve.mean.push_back(s.stats.loss[i].mean);
                curve.std.push_back(s.stats.loss[i].std);
            }
            write_text(dir / (s.name + ".svg"),
                       render_svg({s.name, "iteration", "cross-entropy loss", false, 0.0, false, {curve}}));
            std::cout << fmt::format("{}: n={} final loss {:.4f} final accuracy {:.3f}\n", s.name,
                                     s.stats.n, s.stats.final_loss.mean, s.stats.final_accuracy.mean);
        } else if (ed->parsed()) {
            auto cfg = make_config(ExperimentKind::EdTable, ed_common, *ed);
            if (!ed_models.empty()) {
                cfg.models = parse_models(ed_models);
            }
            if (ed_common.config.empty()) {
                cfg.ed.n = ed_n;
                cfg.ed.gamma = ed_gamma;
                cfg.ed.n_theta = ed_theta;
                cfg.ed.n_data = ed_data;
                cfg.ed_inputs = ed_inputs == "iris" ? EdInputs::Iris : EdInputs::Uniform;
            }
            print_report(run_experiment(cfg));
        } else if (sw->parsed()) {
            auto cfg = make_config(ExperimentKind::ShotSweep, sw_common, *sw);
            if (!sw_shots.empty()) {
                cfg.shots = sw_shots;
            }
            if (!sw_models.empty()) {
                cfg.models = parse_models(sw_models);
            }
            print_report(run_experiment(cfg));
        } else if (th->parsed()) {
            std::cout << fmt::format("net shot rate: {:.1f} Hz\n",
                                     net_shot_rate(th_rate, th_t, th_success, th_brightness));
            if (!th_out.empty()) {
                auto cfg = default_config(ExperimentKind::Throughput);
                cfg.out_dir = th_out;
                print_report(run_experiment(cfg));
            }
        } else if (rep->parsed()) {
            print_report(run_experiment(make_config(figures().at(figure), rep_common, *rep)));
        }
    } catch (const std::exception &e) {
        spdlog::error("{}", e.what());
        return EXIT_FAILURE;
    }
    return EXIT_SUCCESS;
}
