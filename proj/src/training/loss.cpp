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

#include "pqnn/training/loss.hpp"

#include <algorithm>
#include <cmath>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {
double clamp_p(double p) { return std::clamp(p, kLossClamp, 1.0 - kLossClamp); }
void check_label(int label) {
    if (label != 0 && label != 1) {
        throw ArgumentError("labels must be 0 or 1");
    }
}
} // namespace

double bce_loss(double p, int label) {
    check_label(label);
    const double q = clamp_p(p);
    return label == 1 ? -std::log(q) : -std::log1p(-q);
}

double bce_derivative(double p, int label) {
    check_label(label);
    const double q = clamp_p(p);
    return label == 1 ? -1.0 / q : 1.0 / (1.0 - q);
}

} // namespace pqnn
