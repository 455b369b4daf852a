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

// Independent reference computations shared by the unit tests. Nothing here
// calls into the library's simulators.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using M2 = std::array<std::array<C, 2>, 2>;
using M4 = std::array<std::array<C, 4>, 4>;

inline M2 rx(double t) {
    const C c = std::cos(t / 2), s = std::sin(t / 2);
    return {{{c, C(0, -1) * s}, {C(0, -1) * s, c}}};
}
inline M2 ry(double t) {
    const C c = std::cos(t / 2), s = std::sin(t / 2);
    return {{{c, -s}, {s, c}}};
}
inline M2 rz(double t) {
    return {{{std::polar(1.0, -t / 2), 0}, {0, std::polar(1.0, t / 2)}}};
}
inline M2 eye2() { return {{{1, 0}, {0, 1}}}; }

// Kronecker product a (x) b with a acting on the most significant qubit.
inline M4 kron(const M2 &a, const M2 &b) {
    M4 out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[i][j] = a[i / 2][j / 2] * b[i % 2][j % 2];
        }
    }
    return out;
}
inline M4 cnot01() {
    M4 m{};
    m[0][0] = m[1][1] = 1;
    m[2][3] = m[3][2] = 1;
    return m;
}
inline std::array<C, 4> apply(const M4 &m, const std::array<C, 4> &v) {
    std::array<C, 4> out{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

// QNN2 and QNN6 as explicit 4x4 matrix chains acting on |00>.
inline std::array<C, 4> qnn2_state(double x0, double x1, double w0, double w1, double scale) {
    std::array<C, 4> v{1, 0, 0, 0};
    v = oracle::apply(kron(rx(scale * x0), rx(scale * x1)), v);
    v = oracle::apply(cnot01(), v);
    v = oracle::apply(kron(ry(w0), ry(w1)), v);
    return v;
}
inline std::array<C, 4> qnn6_state(double x0, double x1, const std::array<double, 6> &w,
                                   double scale) {
    std::array<C, 4> v{1, 0, 0, 0};
    v = oracle::apply(kron(rx(scale * x0), rx(scale * x1)), v);
    v = oracle::apply(kron(rz(w[0]), rz(w[3])), v);
    v = oracle::apply(kron(ry(w[1]), ry(w[4])), v);
    v = oracle::apply(cnot01(), v);
    v = oracle::apply(kron(rz(w[2]), rz(w[5])), v);
    return v;
}
inline double parity(const std::array<C, 4> &v) { return std::norm(v[1]) + std::norm(v[2]); }

// Permanent as the sum over all permutations.
template <class Matrix> C brute_permanent(const Matrix &a, int k) {
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    C total = 0;
    do {
        C term = 1;
        for (int i = 0; i < k; ++i) {
            term *= a(i, p[static_cast<std::size_t>(i)]);
        }
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline double logistic(double z) { return 1.0 / (1.0 + std::exp(-z)); }

} // namespace oracle
