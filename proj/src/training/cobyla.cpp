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

#include "pqnn/training/cobyla.hpp"

#include <cmath>
#include <optional>

#include <Eigen/Dense>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {

// Simplex acceptability and step-size constants from Powell's code.
constexpr double kAlpha = 0.25;
constexpr double kBeta = 2.1;
constexpr double kGamma = 0.5;
constexpr double kDelta = 1.1;

class Simplex {
  public:
    explicit Simplex(std::size_t n) : n_(n), pts_(n + 1), f_(n + 1, 0.0) {}

    void set(std::size_t j, std::vector<double> x, double f) {
        pts_[j] = std::move(x);
        f_[j] = f;
    }

    // Vertex j is pivot unless another vertex is strictly lower.
    void repivot() {
        for (std::size_t j = 0; j <= n_; ++j) {
            if (f_[j] < f_[pivot_]) {
                pivot_ = j;
            }
        }
    }

    // Rebuilds the edge matrix (columns = vertex - pivot for non-pivot
    // vertices) and its inverse.
    void factor() {
        others_.clear();
        for (std::size_t j = 0; j <= n_; ++j) {
            if (j != pivot_) {
                others_.push_back(j);
            }
        }
        const auto n = static_cast<Eigen::Index>(n_);
        edges_.resize(n, n);
        for (Eigen::Index c = 0; c < n; ++c) {
            const auto &v = pts_[others_[static_cast<std::size_t>(c)]];
            for (Eigen::Index r = 0; r < n; ++r) {
                edges_(r, c) = v[static_cast<std::size_t>(r)] - pts_[pivot_][static_cast<std::size_t>(r)];
            }
        }
        inverse_ = edges_.fullPivLu().inverse();
        Eigen::VectorXd df(n);
        for (Eigen::Index c = 0; c < n; ++c) {
            df(c) = f_[others_[static_cast<std::size_t>(c)]] - f_[pivot_];
        }
        // Linear model through the vertices: edges^T g = df.
        gradient_ = inverse_.transpose() * df;
        sigma_.resize(n);
        eta_.resize(n);
        for (Eigen::Index j = 0; j < n; ++j) {
            sigma_(j) = 1.0 / inverse_.row(j).norm();
            eta_(j) = edges_.col(j).norm();
        }
    }

    std::size_t n_;
    std::vector<std::vector<double>> pts_;
    std::vector<double> f_;
    std::size_t pivot_ = 0;
    std::vector<std::size_t> others_;
    Eigen::MatrixXd edges_;
    Eigen::MatrixXd inverse_;
    Eigen::VectorXd gradient_;
    Eigen::VectorXd sigma_; // distance of each vertex from the opposite face
    Eigen::VectorXd eta_;   // distance of each vertex from the pivot
};

std::vector<double> offset(const std::vector<double> &base, const Eigen::VectorXd &dx) {
    std::vector<double> x = base;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += dx(static_cast<Eigen::Index>(i));
    }
    return x;
}

} // namespace

CobylaResult cobyla_minimize(const Objective &objective, std::vector<double> x0,
                             const CobylaConfig &cfg) {
    if (!(cfg.rho_begin > 0.0) || !(cfg.rho_end > 0.0) || cfg.rho_end > cfg.rho_begin) {
        throw ArgumentError("COBYLA needs 0 < rho_end <= rho_begin");
    }
    if (cfg.max_evals < 1) {
        throw ArgumentError("COBYLA needs max_evals >= 1");
    }
    const std::size_t n = x0.size();
    int evals = 0;
    auto evaluate = [&](const std::vector<double> &x) -> std::optional<double> {
        if (evals >= cfg.max_evals) {
            return std::nullopt;
        }
        ++evals;
        return objective(x);
    };

    Simplex s(n);
    s.set(0, x0, *evaluate(x0));
    auto finish = [&](bool converged) {
        return CobylaResult{s.pts_[s.pivot_], s.f_[s.pivot_], evals, converged};
    };
    if (n == 0) {
        return finish(true);
    }

    double rho = cfg.rho_begin;
    // Initial simplex: each new vertex steps rho along one axis from the
    // current best point.
    for (std::size_t j = 1; j <= n; ++j) {
        auto x = s.pts_[s.pivot_];
        x[j - 1] += rho;
        const auto f = evaluate(x);
        if (!f) {
            return finish(false);
        }
        s.set(j, std::move(x), *f);
        if (*f < s.f_[s.pivot_]) {
            s.pivot_ = j;
        }
    }

    bool after_trust_step = false;
    while (true) {
        s.repivot();
        s.factor();
        const double par_sigma = kAlpha * rho;
        const double par_eta = kBeta * rho;
        bool acceptable = true;
        for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
            if (s.sigma_(j) < par_sigma || s.eta_(j) > par_eta) {
                acceptable = false;
            }
        }

        if (!after_trust_step && !acceptable) {
            // Geometry repair: replace the vertex that is too far from the
            // pivot, or else the one closest to its opposite face.
            Eigen::Index drop = -1;
            double worst = par_eta;
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
                if (s.eta_(j) > worst) {
                    drop = j;
                    worst = s.eta_(j);
                }
            }
            if (drop < 0) {
                worst = par_sigma;
                for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
                    if (s.sigma_(j) < worst) {
                        drop = j;
                        worst = s.sigma_(j);
                    }
                }
            }
            Eigen::VectorXd dx = (kGamma * rho * s.sigma_(drop)) * s.inverse_.row(drop).transpose();
            if (s.gradient_.dot(dx) > 0.0) {
                dx = -dx;
            }
            auto x = offset(s.pts_[s.pivot_], dx);
            const auto f = evaluate(x);
            if (!f) {
                return finish(false);
            }
            s.set(s.others_[static_cast<std::size_t>(drop)], std::move(x), *f);
            continue;
        }

        // Trust-region step: minimize the linear model within radius rho.
        const double gnorm = s.gradient_.norm();
        bool keep_rho = false;
        if (gnorm > 0.0 && std::isfinite(gnorm)) {
            const Eigen::VectorXd dx = (-rho / gnorm) * s.gradient_;
            const double predicted = rho * gnorm;
            auto x = offset(s.pts_[s.pivot_], dx);
            const auto f = evaluate(x);
            if (!f) {
                return finish(false);
            }
            const double actual = s.f_[s.pivot_] - *f;

            // Pick the vertex to replace; mandatory when the step improved.
            Eigen::Index drop = -1;
            double ratio = actual <= 0.0 ? 1.0 : 0.0;
            Eigen::VectorXd sigbar(static_cast<Eigen::Index>(n));
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
                const double t = std::abs(s.inverse_.row(j).dot(dx));
                if (t > ratio) {
                    drop = j;
                    ratio = t;
                }
                sigbar(j) = t * s.sigma_(j);
            }
            double edge_max = kDelta * rho;
            Eigen::Index far = -1;
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(n); ++j) {
                if (sigbar(j) >= par_sigma || sigbar(j) >= s.sigma_(j)) {
                    double t = s.eta_(j);
                    if (actual > 0.0) {
                        t = (dx - s.edges_.col(j)).norm();
                    }
                    if (t > edge_max) {
                        far = j;
                        edge_max = t;
                    }
                }
            }
            if (far >= 0) {
                drop = far;
            }
            if (drop >= 0) {
                s.set(s.others_[static_cast<std::size_t>(drop)], std::move(x), *f);
                keep_rho = actual > 0.0 && actual >= 0.1 * predicted;
            }
        }
        after_trust_step = true;
        if (keep_rho) {
            continue;
        }
        if (!acceptable) {
            after_trust_step = false;
            continue;
        }
        if (rho <= cfg.rho_end) {
            s.repivot();
            return finish(true);
        }
        rho *= 0.5;
        if (rho <= 1.5 * cfg.rho_end) {
            rho = cfg.rho_end;
        }
    }
}

} // namespace pqnn
