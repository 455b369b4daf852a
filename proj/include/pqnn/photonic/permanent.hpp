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

#include <Eigen/Dense>

#include "pqnn/core/statevector.hpp"

namespace pqnn {

using CMatrix = Eigen::MatrixXcd;

/**
 * Matrix permanent by Ryser's inclusion-exclusion formula with Gray-code
 * subset enumeration, O(2^k k). The empty matrix has permanent 1.
 * Throws ArgumentError for non-square input.
 */
[[nodiscard]] Complex permanent(const CMatrix &matrix);

} // namespace pqnn
