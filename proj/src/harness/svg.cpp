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

#include "pqnn/harness/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "pqnn/error.hpp"

namespace pqnn {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 150.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

constexpr std::array<const char *, 6> kColors{"#1f77b4", "#d62728", "#2ca02c",
                                              "#9467bd", "#ff7f0e", "#17becf"};

std::string escape(const std::string &s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void settle() {
        if (!(lo <= hi)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
};

} // namespace

std::string render_svg(const PlotSpec &plot) {
    Range xr;
    Range yr;
    for (const auto &s : plot.series) {
        if (s.x.size() != s.mean.size() || (!s.std.empty() && s.std.size() != s.mean.size())) {
            throw ArgumentError("plot series '" + s.label + "' has mismatched lengths");
        }
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (plot.log_x && !(s.x[i] > 0.0)) {
                throw ArgumentError("log-x plot needs positive x values");
            }
            xr.add(plot.log_x ? std::log10(s.x[i]) : s.x[i]);
            const double sd = s.std.empty() ? 0.0 : s.std[i];
            yr.add(s.mean[i] - sd);
            yr.add(s.mean[i] + sd);
        }
    }
    if (plot.has_reference) {
        yr.add(plot.reference_y);
    }
    xr.settle();
    yr.settle();
    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto px = [&](double x) {
        const double v = plot.log_x ? std::log10(x) : x;
        return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * pw;
    };
    auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        kWidth, kHeight);
    out += fmt::format("<text x=\"{:.1f}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       kLeft + pw / 2, escape(plot.title));
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       kLeft, kTop, pw, ph);
    for (int t = 0; t <= 4; ++t) {
        const double fy = yr.lo + (yr.hi - yr.lo) * t / 4.0;
        const double fx = xr.lo + (xr.hi - xr.lo) * t / 4.0;
        const double y = py(fy);
        const double x = kLeft + pw * t / 4.0;
        out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" "
                           "stroke=\"#ddd\"/>\n<text x=\"{3:.1f}\" y=\"{4:.1f}\" "
                           "text-anchor=\"end\">{5:.3g}</text>\n",
                           kLeft, y, kLeft + pw, kLeft - 6, y + 4, fy);
        out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.3g}</text>\n",
                           x, kTop + ph + 16, plot.log_x ? std::pow(10.0, fx) : fx);
    }
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                       kLeft + pw / 2, kHeight - 12, escape(plot.x_label));
    out += fmt::format("<text transform=\"translate(18,{:.1f}) rotate(-90)\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       kTop + ph / 2, escape(plot.y_label));
    if (plot.has_reference) {
        out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" "
                           "stroke=\"gray\" stroke-dasharray=\"6,4\"/>\n",
                           kLeft, py(plot.reference_y), kLeft + pw);
    }

    for (std::size_t k = 0; k < plot.series.size(); ++k) {
        const auto &s = plot.series[k];
        const char *color = kColors[k % kColors.size()];
        if (!s.std.empty() && s.x.size() > 1) {
            std::string band;
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                band += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.mean[i] + s.std[i]));
            }
            for (std::size_t i = s.x.size(); i-- > 0;) {
                band += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.mean[i] - s.std[i]));
            }
            out += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.2\" "
                               "stroke=\"none\"/>\n",
                               band, color);
        }
        std::string line;
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            line += fmt::format("{:.2f},{:.2f} ", px(s.x[i]), py(s.mean[i]));
        }
        out += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" "
                           "stroke-width=\"1.8\"/>\n",
                           line, color);
        if (s.x.size() == 1) {
            out += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"3\" fill=\"{}\"/>\n",
                               px(s.x[0]), py(s.mean[0]), color);
        }
        const double ly = kTop + 14.0 + 18.0 * static_cast<double>(k);
        out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" "
                           "stroke=\"{3}\" stroke-width=\"3\"/>\n"
                           "<text x=\"{4:.1f}\" y=\"{5:.1f}\">{6}</text>\n",
                           kLeft + pw + 10, ly, kLeft + pw + 28, color, kLeft + pw + 34, ly + 4,
                           escape(s.label));
    }
    out += "</svg>\n";
    return out;
}

} // namespace pqnn
