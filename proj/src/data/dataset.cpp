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

#include "pqnn/data/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "pqnn/error.hpp"
#include "pqnn/rng.hpp"

namespace pqnn {

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        const auto b = field.find_first_not_of(" \t\r\"");
        const auto e = field.find_last_not_of(" \t\r\"");
        out.push_back(b == std::string::npos ? std::string{} : field.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

bool parse_double(const std::string &s, double &out) {
    if (s.empty()) {
        return false;
    }
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

bool blank(const std::string &line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// 0 setosa, 1 versicolor, 2 virginica, -1 unknown.
int species_code(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s.starts_with("iris-")) {
        s = s.substr(5);
    }
    if (s == "setosa" || s == "0") {
        return 0;
    }
    if (s == "versicolor" || s == "1") {
        return 1;
    }
    if (s == "virginica" || s == "2") {
        return 2;
    }
    return -1;
}

} // namespace

std::size_t Dataset::count_b() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const Sample &s) { return s.label == 1; }));
}

Dataset gen_xor(int n_per_cluster, double sigma, std::uint64_t seed) {
    if (n_per_cluster < 1) {
        throw ArgumentError("gen_xor: n_per_cluster must be >= 1");
    }
    if (!(sigma >= 0.0)) {
        throw ArgumentError("gen_xor: sigma must be >= 0");
    }
    struct Cluster {
        double cx, cy;
        int label;
    };
    constexpr std::array<Cluster, 4> clusters{{
        {0.25, 0.25, 0},
        {0.75, 0.75, 0},
        {0.25, 0.75, 1},
        {0.75, 0.25, 1},
    }};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    Dataset d;
    d.name = "xor";
    d.rows.reserve(4 * static_cast<std::size_t>(n_per_cluster));
    for (const auto &c : clusters) {
        for (int i = 0; i < n_per_cluster; ++i) {
            const double x = c.cx + sigma * noise(rng);
            const double y = c.cy + sigma * noise(rng);
            d.rows.push_back({std::clamp(x, 0.0, 1.0), std::clamp(y, 0.0, 1.0), c.label});
        }
    }
    return d;
}

Dataset load_iris(const std::filesystem::path &path, IrisNormalization norm) {
    std::ifstream in(path);
    if (!in) {
        throw IngestionError("cannot open Iris file " + path.string(), 0);
    }
    Dataset d;
    d.name = "iris";
    std::string line;
    std::size_t row = 0;
    bool saw_versicolor = false;
    bool saw_virginica = false;
    while (std::getline(in, line)) {
        ++row;
        if (blank(line)) {
            continue;
        }
        const auto fields = split_csv_line(line);
        if (fields.size() != 5) {
            throw IngestionError(fmt::format("expected 5 columns, got {}", fields.size()), row);
        }
        std::array<double, 4> v{};
        bool numeric = true;
        for (std::size_t k = 0; k < 4; ++k) {
            numeric = numeric && parse_double(fields[k], v[k]);
        }
        if (!numeric) {
            if (row == 1 && d.rows.empty()) {
                continue; // header
            }
            throw IngestionError("non-numeric feature value", row);
        }
        const int code = species_code(fields[4]);
        if (code < 0) {
            throw IngestionError("unknown species '" + fields[4] + "'", row);
        }
        if (v[2] < 0.0 || v[3] < 0.0) {
            throw IngestionError("negative petal measurement", row);
        }
        if (code == 0) {
            continue;
        }
        saw_versicolor = saw_versicolor || code == 1;
        saw_virginica = saw_virginica || code == 2;
        d.rows.push_back({v[2], v[3], code == 2 ? 1 : 0});
    }
    if (!saw_versicolor || !saw_virginica) {
        throw IngestionError(std::string("missing class ") +
                                 (saw_versicolor ? "virginica" : "versicolor"),
                             row);
    }
    for (int col = 0; col < 2; ++col) {
        auto get = [col](Sample &s) -> double & { return col == 0 ? s.x0 : s.x1; };
        double lo = get(d.rows.front());
        double hi = lo;
        for (auto &s : d.rows) {
            lo = std::min(lo, get(s));
            hi = std::max(hi, get(s));
        }
        if (norm == IrisNormalization::Max) {
            if (!(hi > 0.0)) {
                throw IngestionError("feature column is all zero", row);
            }
            for (auto &s : d.rows) {
                get(s) /= hi;
            }
        } else {
            if (!(hi > lo)) {
                throw IngestionError("feature column is constant", row);
            }
            for (auto &s : d.rows) {
                get(s) = (get(s) - lo) / (hi - lo);
            }
        }
    }
    return d;
}

std::vector<std::size_t> shuffle_split_order(std::size_t size, std::uint64_t seed) {
    std::vector<std::size_t> order(size);
    for (std::size_t i = 0; i < size; ++i) {
        order[i] = i;
    }
    SplitMix64 rng(seed);
    for (std::size_t i = size; i > 1; --i) {
        // Unbiased draw in [0, i) by rejection.
        const std::uint64_t bound = i;
        const std::uint64_t limit = SplitMix64::max() - SplitMix64::max() % bound;
        std::uint64_t r = rng();
        while (r >= limit) {
            r = rng();
        }
        std::swap(order[i - 1], order[static_cast<std::size_t>(r % bound)]);
    }
    return order;
}

std::vector<std::size_t> shuffle_split_order(const Dataset &dataset, std::uint64_t seed) {
    return shuffle_split_order(dataset.size(), seed);
}

std::string dataset_csv(const Dataset &dataset) {
    std::string out = "x0,x1,label\n";
    for (const auto &s : dataset.rows) {
        out += fmt::format("{:.17g},{:.17g},{}\n", s.x0, s.x1, s.label);
    }
    return out;
}

void write_dataset_csv(const Dataset &dataset, const std::filesystem::path &path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << dataset_csv(dataset);
}

Dataset read_dataset_csv(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw IngestionError("cannot open dataset " + path.string(), 0);
    }
    Dataset d;
    d.name = path.stem().string();
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (blank(line)) {
            continue;
        }
        const auto f = split_csv_line(line);
        if (f.size() != 3) {
            throw IngestionError(fmt::format("expected 3 columns, got {}", f.size()), row);
        }
        Sample s;
        double label = 0.0;
        if (!parse_double(f[0], s.x0) || !parse_double(f[1], s.x1) || !parse_double(f[2], label)) {
            if (row == 1) {
                continue;
            }
            throw IngestionError("non-numeric value", row);
        }
        if (label != 0.0 && label != 1.0) {
            throw IngestionError("label must be 0 or 1", row);
        }
        if (s.x0 < 0.0 || s.x0 > 1.0 || s.x1 < 0.0 || s.x1 > 1.0) {
            throw IngestionError("feature outside [0,1]", row);
        }
        s.label = static_cast<int>(label);
        d.rows.push_back(s);
    }
    if (d.rows.empty()) {
        throw IngestionError("dataset has no rows", row);
    }
    return d;
}

} // namespace pqnn
