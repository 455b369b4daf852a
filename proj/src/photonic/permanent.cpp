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

#include "pqnn/photonic/permanent.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "pqnn/error.hpp"

namespace pqnn {

Complex permanent(const CMatrix &matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw ArgumentError("permanent requires a square matrix");
    }
    const auto k = static_cast<int>(matrix.rows());
    if (k == 0) {
        return {1.0, 0.0};
    }
    if (k > 30) {
        throw CapabilityError("permanent size exceeds 30");
    }
    if (k == 1) {
        return matrix(0, 0);
    }

    // row_sums[i] = sum over columns j in the current subset of a_ij
    std::vector<Complex> row_sums(static_cast<std::size_t>(k), Complex{0.0, 0.0});
    Complex total{0.0, 0.0};
    std::uint64_t gray = 0;
    const std::uint64_t n_subsets = std::uint64_t{1} << static_cast<unsigned>(k);
    for (std::uint64_t step = 1; step < n_subsets; ++step) {
        const auto col = std::countr_zero(step);
        const std::uint64_t bit = std::uint64_t{1} << static_cast<unsigned>(col);
        const bool adding = (gray & bit) == 0U;
        gray ^= bit;
        for (int i = 0; i < k; ++i) {
            if (adding) {
                row_sums[static_cast<std::size_t>(i)] += matrix(i, col);
            } else {
                row_sums[static_cast<std::size_t>(i)] -= matrix(i, col);
            }
        }
        Complex prod = row_sums[0];
        for (int i = 1; i < k; ++i) {
            prod *= row_sums[static_cast<std::size_t>(i)];
        }
        // Sign (-1)^(k - |S|).
        if (((k - std::popcount(gray)) & 1) != 0) {
            total -= prod;
        } else {
            total += prod;
        }
    }
    return total;
}

} // namespace pqnn
