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
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pqnn {

struct Sample {
    double x0 = 0.0;
    double x1 = 0.0;
    int label = 0; // 0 = class A, 1 = class B

    [[nodiscard]] std::array<double, 2> features() const { return {x0, x1}; }
    friend bool operator==(const Sample &, const Sample &) = default;
};

struct Dataset {
    std::string name;
    std::vector<Sample> rows;

    [[nodiscard]] std::size_t size() const noexcept { return rows.size(); }
    [[nodiscard]] bool empty() const noexcept { return rows.empty(); }
    /// Number of rows labelled B.
    [[nodiscard]] std::size_t count_b() const;
};

inline constexpr int kXorPerCluster = 16;
inline constexpr double kXorSigma = 0.05;

/**
 * Four Gaussian clusters of n_per_cluster points each. Centers (0.25,0.25)
 * and (0.75,0.75) are class A, (0.25,0.75) and (0.75,0.25) class B; points
 * are clipped to the unit square. Rows are ordered cluster by cluster.
 */
[[nodiscard]] Dataset gen_xor(int n_per_cluster = kXorPerCluster, double sigma = kXorSigma,
                              std::uint64_t seed = 1);

enum class IrisNormalization { Max, MinMax };

/**
 * Versicolor (A) vs Virginica (B) from the standard 150-row Iris CSV, using
 * petal length and petal width. A header row is skipped if present; species
 * may be given by name or as integer code 0/1/2.
 */
[[nodiscard]] Dataset load_iris(const std::filesystem::path &path,
                                IrisNormalization norm = IrisNormalization::Max);

/// Seeded Fisher-Yates permutation of 0..size-1.
[[nodiscard]] std::vector<std::size_t> shuffle_split_order(std::size_t size, std::uint64_t seed);
[[nodiscard]] std::vector<std::size_t> shuffle_split_order(const Dataset &dataset,
                                                           std::uint64_t seed);

/// `x0,x1,label` with a header line, 17 significant digits.
void write_dataset_csv(const Dataset &dataset, const std::filesystem::path &path);
[[nodiscard]] std::string dataset_csv(const Dataset &dataset);
[[nodiscard]] Dataset read_dataset_csv(const std::filesystem::path &path);

} // namespace pqnn
