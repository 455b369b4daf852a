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

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <omp.h>

#include "pqnn/error.hpp"
#include "pqnn/harness/backend.hpp"
#include "pqnn/harness/csv.hpp"
#include "pqnn/harness/experiment.hpp"
#include "pqnn/harness/statistics.hpp"
#include "pqnn/harness/svg.hpp"

using namespace pqnn;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
TrainTrace synthetic(const std::vector<double> &losses, std::uint64_t seed = 0) {
    TrainTrace t;
    t.seed = seed;
    for (std::size_t i = 0; i < losses.size(); ++i) {
        t.records.push_back({static_cast<int>(i), losses[i], 1.0 - losses[i], {0.0, 0.0}});
    }
    return t;
}

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir(const std::string &name) {
    const auto p = std::filesystem::temp_directory_path() / ("pqnn_harness_" + name);
    std::filesystem::remove_all(p);
    return p;
}

ExperimentConfig small_xor_config(const std::filesystem::path &out) {
    auto cfg = default_config(ExperimentKind::XorCompare);
    cfg.trials = 4;
    cfg.train.max_iterations = 25;
    cfg.out_dir = out;
    return cfg;
}
} // namespace

TEST_CASE("moments", "[harness]") {
    const std::vector<double> two{0.0, 1.0};
    const auto m = moments(two);
    CHECK(m.n == 2);
    CHECK(m.mean == 0.5);
    CHECK_THAT(m.std, WithinAbs(std::sqrt(0.5), 1e-15));
    CHECK_THAT(m.std_nm1, WithinAbs(std::sqrt(0.5), 1e-15));
    CHECK_THAT(m.ci95, WithinAbs(1.96 * std::sqrt(0.5) / std::sqrt(2.0), 1e-15));
    CHECK(m.has_spread);

    const std::vector<double> one{0.3};
    const auto s = moments(one);
    CHECK(s.n == 1);
    CHECK(s.std == 0.0);
    CHECK_FALSE(s.has_spread);
    CHECK_THROWS_AS(moments(std::vector<double>{}), ArgumentError);
}

TEST_CASE("summarize traces", "[harness]") {
    const std::vector<TrainTrace> same{synthetic({0.9, 0.5, 0.2}), synthetic({0.9, 0.5, 0.2})};
    const auto s = summarize(same);
    CHECK(s.n == 2);
    CHECK_FALSE(s.padded);
    for (const auto &m : s.loss) {
        CHECK(m.std == 0.0);
    }

    const std::vector<TrainTrace> finals{synthetic({0.0}), synthetic({1.0})};
    const auto f = summarize(finals);
    CHECK(f.final_loss.mean == 0.5);
    CHECK_THAT(f.final_loss.std, WithinAbs(std::sqrt(0.5), 1e-15));

    const std::vector<TrainTrace> ragged{synthetic({1.0, 0.5, 0.25, 0.2}), synthetic({1.0, 0.4})};
    const auto r = summarize(ragged);
    CHECK(r.padded);
    REQUIRE(r.iterations.size() == 4);
    CHECK_THAT(r.loss[3].mean, WithinAbs((0.2 + 0.4) / 2, 1e-15));
    CHECK(r.iterations == std::vector<int>{0, 1, 2, 3});

    // Final statistics use the mean of the last five records of each trace.
    const std::vector<TrainTrace> tail{synthetic({9, 9, 1, 2, 3, 4, 5})};
    CHECK_THAT(summarize(tail).final_loss.mean, WithinAbs(3.0, 1e-15));

    CHECK_THROWS_AS(summarize(std::vector<TrainTrace>{}), ArgumentError);
}

TEST_CASE("confidence interval of Gaussian traces", "[harness]") {
    std::mt19937_64 rng(31);
    const double sigma = 0.2;
    std::normal_distribution<double> g(1.0, sigma);
    double ratio_sum = 0.0;
    const int reps = 400;
    for (int rep = 0; rep < reps; ++rep) {
        std::vector<TrainTrace> traces;
        for (int k = 0; k < 10; ++k) {
            traces.push_back(synthetic({g(rng)}));
        }
        const auto s = summarize(traces);
        CHECK_THAT(s.loss[0].ci95, WithinRel(1.96 * s.loss[0].std / std::sqrt(10.0), 1e-12));
        ratio_sum += s.loss[0].std;
    }
    // The average sample std recovers sigma (c4 bias at n = 10 is under 3%).
    const double expected_ci = 1.96 * sigma / std::sqrt(10.0);
    CHECK_THAT(1.96 * (ratio_sum / reps) / std::sqrt(10.0), WithinRel(expected_ci, 0.05));
}

TEST_CASE("statistics CSV omits spread for a single trial", "[harness]") {
    const std::vector<TrainTrace> one{synthetic({0.7, 0.6})};
    const auto csv = statistics_csv(summarize(one));
    std::stringstream ss(csv);
    std::string header, row;
    std::getline(ss, header);
    CHECK(header == "iteration,n,loss_mean,loss_std,loss_std_nm1,loss_ci95,accuracy_mean,"
                    "accuracy_std,accuracy_std_nm1,accuracy_ci95");
    std::getline(ss, row);
    CHECK(row == "0,1,0.7,0,,,0.30000000000000004,0,,");

    const std::vector<TrainTrace> two{synthetic({0.0}), synthetic({1.0})};
    const auto csv2 = statistics_csv(summarize(two));
    CHECK(csv2.find(",,") == std::string::npos);
}

TEST_CASE("trace and ED CSV schemas", "[harness]") {
    auto t = synthetic({0.5, 0.25}, 99);
    t.model = ModelKind::QNN6;
    t.backend = "photonic";
    t.shots = 300;
    t.batch_size = 4;
    const std::vector<TrainTrace> traces{t};
    const std::vector<int> trials{3};
    CHECK(trace_csv(traces, trials) ==
          "iteration,loss,accuracy,trial,model,backend,shots,batch_size,seed\n"
          "0,0.5,0.5,3,QNN6,photonic,300,4,99\n"
          "1,0.25,0.75,3,QNN6,photonic,300,4,99\n");
    const std::vector<EDRow> rows{{"QNN2", 2, 1e6, 1.0, 1.9, 0.95, 1}};
    CHECK(ed_csv(rows) == "model,d,n,gamma,ed,normalized_ed,seed\nQNN2,2,1000000,1,1.9,0.95,1\n");
    CHECK(format_number(0.1) == "0.1");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("backend descriptors", "[harness]") {
    const std::vector<double> params{0.4, 1.9};
    const std::vector<std::array<double, 2>> inputs{{0.1, 0.2}, {0.8, 0.3}};

    auto exact = backend_descriptor("exact");
    CHECK(exact->name() == "exact");
    REQUIRE(exact->local_backend());
    CHECK(std::holds_alternative<ExactBackend>(*exact->local_backend()));
    const auto r = run_job(*exact, ModelKind::QNN2, params, inputs, 1);
    CHECK(r.status == JobStatus::Completed);
    REQUIRE(r.probabilities.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(r.probabilities[i] == predict_exact(ModelKind::QNN2, params, inputs[i]));
    }

    BackendOptions opts;
    opts.shots = 500;
    auto photonic = backend_descriptor("photonic", opts);
    const auto pb = std::get<PhotonicBackend>(*photonic->local_backend());
    CHECK(pb.shots == 500);
    CHECK(pb.noise == NoiseParams::ascella());
    CHECK(run_job(*photonic, ModelKind::QNN2, params, inputs, 1).status == JobStatus::Completed);

    opts.depolarizing = 0.02;
    auto gate = backend_descriptor("gate-noise", opts);
    CHECK(std::get<SampledBackend>(*gate->local_backend()).depolarizing == 0.02);
    CHECK(backend_descriptor("sampled")->local_backend().has_value());

    auto stub = backend_descriptor("remote-stub");
    CHECK_FALSE(stub->local_backend());
    const auto id = stub->submit(ModelKind::QNN2, params, inputs, 5);
    CHECK(stub->poll(id) == JobStatus::Unsupported);
    const auto res = stub->collect(id);
    CHECK(res.status == JobStatus::Unsupported);
    CHECK(res.probabilities.empty());
    CHECK_FALSE(res.message.empty());
    CHECK(run_job(*stub, ModelKind::QNN2, params, inputs, 6).status == JobStatus::Unsupported);
    CHECK(stub->submitted().size() == 2);
    CHECK(to_string(JobStatus::Unsupported) == "unsupported");

    CHECK_THROWS_AS(backend_descriptor("ibm-cloud"), ConfigError);
}

TEST_CASE("SVG rendering", "[harness]") {
    PlotSpec plot;
    plot.title = "loss <demo>";
    plot.x_label = "iteration";
    plot.y_label = "loss";
    plot.has_reference = true;
    plot.reference_y = 0.69;
    plot.series.push_back({"QNN2", {0, 1, 2}, {0.9, 0.5, 0.1}, {0.1, 0.05, 0.01}});
    plot.series.push_back({"ANN2", {0, 1, 2}, {0.7, 0.7, 0.7}, {}});
    const auto svg = render_svg(plot);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("QNN2") != std::string::npos);
    CHECK(svg.find("&lt;demo&gt;") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(render_svg(plot) == svg);
}

TEST_CASE("experiment configuration", "[harness]") {
    for (auto k : {ExperimentKind::XorCompare, ExperimentKind::IrisBatchCompare,
                   ExperimentKind::ShotSweep, ExperimentKind::EdTable, ExperimentKind::Throughput,
                   ExperimentKind::PlatformCompare}) {
        CHECK(experiment_kind_from_string(to_string(k)) == k);
        const auto cfg = default_config(k);
        CHECK_NOTHROW(cfg.validate());
        const nlohmann::json j = cfg;
        const auto back = nlohmann::json::parse(j.dump()).get<ExperimentConfig>();
        CHECK(nlohmann::json(back) == j);
    }
    CHECK(default_config(ExperimentKind::XorCompare).models ==
          std::vector<ModelKind>{ModelKind::QNN2, ModelKind::ANN2});
    CHECK(default_config(ExperimentKind::ShotSweep).trials == 10);
    CHECK(default_config(ExperimentKind::ShotSweep).shots ==
          std::vector<long>{10, 30, 100, 300, 1000, 10000, 100000});
    CHECK_THROWS_AS(experiment_kind_from_string("fig9"), ConfigError);

    auto bad = default_config(ExperimentKind::XorCompare);
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = default_config(ExperimentKind::IrisBatchCompare);
    bad.iris_path = "/nonexistent.csv";
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    const auto dir = scratch_dir("cfg");
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "c.json") << R"({"experiment":"xor_compare","trials":3,"seed":7,
        "models":["QNN2"],"train":{"max_iterations":12,"optimizer":{"name":"cobyla"}}})";
    const auto loaded = load_experiment_config(dir / "c.json");
    CHECK(loaded.trials == 3);
    CHECK(loaded.seed == 7);
    CHECK(loaded.train.max_iterations == 12);
    CHECK(loaded.models == std::vector<ModelKind>{ModelKind::QNN2});
    std::ofstream(dir / "broken.json") << "{\"trials\": ";
    CHECK_THROWS_AS(load_experiment_config(dir / "broken.json"), ConfigError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("experiments reproduce byte-identical files", "[harness]") {
    const auto a_dir = scratch_dir("run_a");
    const auto b_dir = scratch_dir("run_b");
    const auto a = run_experiment(small_xor_config(a_dir));
    const int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto b = run_experiment(small_xor_config(b_dir));
    omp_set_num_threads(threads);

    REQUIRE(a.files.size() == b.files.size());
    CHECK(a.series.size() == 2);
    bool saw_csv = false, saw_svg = false;
    for (std::size_t i = 0; i < a.files.size(); ++i) {
        const auto rel = std::filesystem::relative(a.files[i], a_dir);
        CHECK(rel == std::filesystem::relative(b.files[i], b_dir));
        saw_csv = saw_csv || rel.extension() == ".csv";
        saw_svg = saw_svg || rel.extension() == ".svg";
        if (rel.filename() == "config.json") {
            continue; // records the output directory
        }
        CHECK(read_file(a.files[i]) == read_file(b.files[i]));
    }
    CHECK(saw_csv);
    CHECK(saw_svg);
    CHECK(std::filesystem::exists(a_dir / "xor_compare" / "QNN2.csv"));
    CHECK(std::filesystem::exists(a_dir / "xor_compare" / "QNN2.svg"));

    const auto &q = a.find("QNN2");
    CHECK(q.stats.n == 4);
    CHECK(q.trials == std::vector<int>{0, 1, 2, 3});
    CHECK_THROWS_AS(a.find("QNN7"), ArgumentError);

    // A single trial leaves spread columns empty.
    auto one = small_xor_config(scratch_dir("run_one"));
    one.trials = 1;
    one.write_files = false;
    const auto single = run_experiment(one);
    CHECK(single.files.empty());
    CHECK(single.series[0].stats.n == 1);
    CHECK_FALSE(single.series[0].stats.final_loss.has_spread);

    std::filesystem::remove_all(a_dir);
    std::filesystem::remove_all(b_dir);
}

TEST_CASE("failed trials are logged and dropped", "[harness]") {
    const auto data = gen_xor(4, 0.05, 1);
    TrainConfig t;
    t.max_iterations = 5;
    NoiseParams dark;
    dark.transmittance = 0.0;
    t.backend = PhotonicBackend{dark, 100};
    std::vector<std::string> warnings;
    CHECK_THROWS(run_trials("dark", ModelKind::QNN2, data, t, 3, 1, warnings));
    CHECK(warnings.size() == 3);
    CHECK(warnings[0].find("trial 0 failed") != std::string::npos);
}

TEST_CASE("throughput experiment", "[harness]") {
    auto cfg = default_config(ExperimentKind::Throughput);
    cfg.write_files = false;
    const auto r = run_experiment(cfg);
    REQUIRE(r.throughput.size() >= 3);
    CHECK_THAT(r.throughput[0].rate_hz, WithinRel(195555.5556, 1e-9));
    bool saw_near_ten = false;
    for (const auto &row : r.throughput) {
        saw_near_ten = saw_near_ten || std::abs(row.rate_hz - 9.6e6) < 1.0;
    }
    CHECK(saw_near_ten);
}
