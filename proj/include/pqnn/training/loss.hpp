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

namespace pqnn {

inline constexpr double kLossClamp = 1e-12;

/// Binary cross-entropy with p clamped to [kLossClamp, 1 - kLossClamp].
[[nodiscard]] double bce_loss(double p, int label);

/// dL/dp at the clamped probability.
[[nodiscard]] double bce_derivative(double p, int label);

} // namespace pqnn
