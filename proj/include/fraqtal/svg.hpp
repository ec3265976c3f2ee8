// Copyright 2026 The Fraqtal Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dependency-free SVG 1.1 chart emission: scatter, annotated heatmap and
 * bar charts. Output is plain text with fixed-precision coordinates, so
 * identical inputs give identical bytes.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fraqtal {

enum class PlotKind { Scatter, Heatmap, Bars };

struct ScatterSeries {
    std::string name;
    std::string color;  // CSS color
    std::vector<std::pair<double, double>> points;
};

struct SvgPlot {
    PlotKind kind = PlotKind::Scatter;
    int width = 720;
    int height = 540;
    std::string title;
    std::string x_label;
    std::string y_label;

    // Scatter payload.
    std::vector<ScatterSeries> series;

    // Heatmap payload: square matrix with per-row/column labels.
    std::vector<std::string> cell_labels;
    std::vector<double> matrix;  // row-major, values in [-1, 1]

    // Bars payload.
    std::vector<std::string> bar_labels;
    std::vector<double> bar_values;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
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

/// Step size covering `span` with about `target` round-valued ticks.
inline double nice_tick_step(double span, int target = 5) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step;
    if (norm <= 1.0)
        step = 1.0;
    else if (norm <= 2.0)
        step = 2.0;
    else if (norm <= 5.0)
        step = 5.0;
    else
        step = 10.0;
    return step * mag;
}

/// Diverging blue-white-red fill for correlation cells in [-1, 1].
inline std::string diverging_fill(double v) {
    v = std::clamp(v, -1.0, 1.0);
    int r, g, b;
    if (v >= 0.0) {
        r = 255;
        g = b = static_cast<int>(std::lround(255.0 * (1.0 - v)));
    } else {
        b = 255;
        r = g = static_cast<int>(std::lround(255.0 * (1.0 + v)));
    }
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

struct Frame {
    double x0, y0, w, h;  // plot area in pixel coordinates
};

inline void emit_axes(std::string& svg, const Frame& f, double x_min,
                      double x_max, double y_min, double y_max,
                      bool x_ticks = true) {
    svg += "<rect x='" + fmt(f.x0) + "' y='" + fmt(f.y0) + "' width='" +
           fmt(f.w) + "' height='" + fmt(f.h) +
           "' fill='none' stroke='#333' stroke-width='1'/>\n";

    const double x_step = nice_tick_step(x_max - x_min);
    for (double t = std::ceil(x_min / x_step) * x_step;
         x_ticks && t <= x_max + 1e-12; t += x_step) {
        const double px = f.x0 + (t - x_min) / (x_max - x_min) * f.w;
        svg += "<line x1='" + fmt(px) + "' y1='" + fmt(f.y0 + f.h) + "' x2='" +
               fmt(px) + "' y2='" + fmt(f.y0 + f.h + 5) +
               "' stroke='#333' stroke-width='1'/>\n";
        svg += "<text x='" + fmt(px) + "' y='" + fmt(f.y0 + f.h + 18) +
               "' font-size='11' text-anchor='middle'>" + fmt(t) + "</text>\n";
    }
    const double y_step = nice_tick_step(y_max - y_min);
    for (double t = std::ceil(y_min / y_step) * y_step; t <= y_max + 1e-12;
         t += y_step) {
        const double py = f.y0 + f.h - (t - y_min) / (y_max - y_min) * f.h;
        svg += "<line x1='" + fmt(f.x0 - 5) + "' y1='" + fmt(py) + "' x2='" +
               fmt(f.x0) + "' y2='" + fmt(py) +
               "' stroke='#333' stroke-width='1'/>\n";
        svg += "<text x='" + fmt(f.x0 - 8) + "' y='" + fmt(py + 4) +
               "' font-size='11' text-anchor='end'>" + fmt(t) + "</text>\n";
    }
}

inline void emit_labels(std::string& svg, const SvgPlot& plot, const Frame& f) {
    if (!plot.title.empty())
        svg += "<text x='" + fmt(f.x0 + f.w / 2) +
               "' y='24' font-size='15' text-anchor='middle' "
               "font-weight='bold'>" +
               xml_escape(plot.title) + "</text>\n";
    if (!plot.x_label.empty())
        svg += "<text x='" + fmt(f.x0 + f.w / 2) + "' y='" +
               fmt(f.y0 + f.h + 38) + "' font-size='12' text-anchor='middle'>" +
               xml_escape(plot.x_label) + "</text>\n";
    if (!plot.y_label.empty())
        svg += "<text x='16' y='" + fmt(f.y0 + f.h / 2) +
               "' font-size='12' text-anchor='middle' transform='rotate(-90 16 " +
               fmt(f.y0 + f.h / 2) + ")'>" + xml_escape(plot.y_label) +
               "</text>\n";
}

}  // namespace detail

/// Renders the plot to SVG text. Throws std::invalid_argument on empty data.
inline std::string render_svg(const SvgPlot& plot) {
    using detail::fmt;
    using detail::xml_escape;

    std::string svg;
    svg += "<svg xmlns='http://www.w3.org/2000/svg' version='1.1' width='" +
           std::to_string(plot.width) + "' height='" +
           std::to_string(plot.height) + "'>\n";
    svg += "<rect width='100%' height='100%' fill='white'/>\n";

    const detail::Frame frame{64.0, 40.0, plot.width - 64.0 - 148.0,
                              plot.height - 40.0 - 56.0};

    switch (plot.kind) {
        case PlotKind::Scatter: {
            std::size_t total_points = 0;
            for (const ScatterSeries& s : plot.series)
                total_points += s.points.size();
            if (total_points == 0)
                throw std::invalid_argument("render_svg: scatter has no points");

            double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
            for (const ScatterSeries& s : plot.series)
                for (const auto& [x, y] : s.points) {
                    x_min = std::min(x_min, x);
                    x_max = std::max(x_max, x);
                    y_min = std::min(y_min, y);
                    y_max = std::max(y_max, y);
                }
            // Pad degenerate and thin ranges so points stay inside the frame.
            const double x_pad = (x_max - x_min) * 0.05 + 1e-9;
            const double y_pad = (y_max - y_min) * 0.05 + 1e-9;
            x_min -= x_pad;
            x_max += x_pad;
            y_min -= y_pad;
            y_max += y_pad;

            detail::emit_axes(svg, frame, x_min, x_max, y_min, y_max);
            for (const ScatterSeries& s : plot.series) {
                for (const auto& [x, y] : s.points) {
                    const double px =
                        frame.x0 + (x - x_min) / (x_max - x_min) * frame.w;
                    const double py = frame.y0 + frame.h -
                                      (y - y_min) / (y_max - y_min) * frame.h;
                    svg += "<circle cx='" + fmt(px) + "' cy='" + fmt(py) +
                           "' r='3' fill='" + s.color +
                           "' fill-opacity='0.7'/>\n";
                }
            }
            // Legend with square swatches (circles are data points only).
            double ly = frame.y0 + 8;
            const double lx = frame.x0 + frame.w + 16;
            for (const ScatterSeries& s : plot.series) {
                svg += "<rect x='" + fmt(lx) + "' y='" + fmt(ly) +
                       "' width='10' height='10' fill='" + s.color + "'/>\n";
                svg += "<text x='" + fmt(lx + 16) + "' y='" + fmt(ly + 9) +
                       "' font-size='11'>" + xml_escape(s.name) + "</text>\n";
                ly += 18;
            }
            break;
        }
        case PlotKind::Heatmap: {
            const std::size_t n = plot.cell_labels.size();
            if (n == 0 || plot.matrix.size() != n * n)
                throw std::invalid_argument("render_svg: heatmap matrix empty or not square");

            const double cell_w = frame.w / n;
            const double cell_h = frame.h / n;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    const double v = plot.matrix[r * n + c];
                    const double px = frame.x0 + c * cell_w;
                    const double py = frame.y0 + r * cell_h;
                    svg += "<rect x='" + fmt(px) + "' y='" + fmt(py) +
                           "' width='" + fmt(cell_w) + "' height='" +
                           fmt(cell_h) + "' fill='" +
                           detail::diverging_fill(v) +
                           "' stroke='#999' stroke-width='0.5'/>\n";
                    svg += "<text x='" + fmt(px + cell_w / 2) + "' y='" +
                           fmt(py + cell_h / 2 + 4) +
                           "' font-size='11' text-anchor='middle'>" + fmt(v) +
                           "</text>\n";
                }
            }
            for (std::size_t i = 0; i < n; ++i) {
                svg += "<text x='" + fmt(frame.x0 + i * cell_w + cell_w / 2) +
                       "' y='" + fmt(frame.y0 + frame.h + 16) +
                       "' font-size='10' text-anchor='middle'>" +
                       xml_escape(plot.cell_labels[i]) + "</text>\n";
                svg += "<text x='" + fmt(frame.x0 - 6) + "' y='" +
                       fmt(frame.y0 + i * cell_h + cell_h / 2 + 4) +
                       "' font-size='10' text-anchor='end'>" +
                       xml_escape(plot.cell_labels[i]) + "</text>\n";
            }
            // Color legend: min/zero/max swatches.
            {
                double ly = frame.y0 + 8;
                const double lx = frame.x0 + frame.w + 16;
                const std::pair<double, const char*> stops[] = {
                    {1.0, "+1"}, {0.0, "0"}, {-1.0, "-1"}};
                for (const auto& [v, text] : stops) {
                    svg += "<rect x='" + fmt(lx) + "' y='" + fmt(ly) +
                           "' width='10' height='10' fill='" +
                           detail::diverging_fill(v) +
                           "' stroke='#999' stroke-width='0.5'/>\n";
                    svg += "<text x='" + fmt(lx + 16) + "' y='" + fmt(ly + 9) +
                           "' font-size='11'>" + std::string(text) +
                           "</text>\n";
                    ly += 18;
                }
            }
            break;
        }
        case PlotKind::Bars: {
            if (plot.bar_values.empty() ||
                plot.bar_values.size() != plot.bar_labels.size())
                throw std::invalid_argument("render_svg: bar data empty or mismatched");

            const double v_max =
                std::max(1e-12, *std::max_element(plot.bar_values.begin(),
                                                  plot.bar_values.end()));
            detail::emit_axes(svg, frame, 0.0,
                              static_cast<double>(plot.bar_values.size()), 0.0,
                              v_max * 1.05, /*x_ticks=*/false);
            const double slot = frame.w / plot.bar_values.size();
            for (std::size_t i = 0; i < plot.bar_values.size(); ++i) {
                const double h =
                    plot.bar_values[i] / (v_max * 1.05) * frame.h;
                const double px = frame.x0 + i * slot + slot * 0.15;
                const double py = frame.y0 + frame.h - h;
                svg += "<rect x='" + fmt(px) + "' y='" + fmt(py) +
                       "' width='" + fmt(slot * 0.7) + "' height='" + fmt(h) +
                       "' fill='#4878a8'/>\n";
                svg += "<text x='" + fmt(px + slot * 0.35) + "' y='" +
                       fmt(py - 5) + "' font-size='11' text-anchor='middle'>" +
                       fmt(plot.bar_values[i]) + "</text>\n";
                svg += "<text x='" + fmt(px + slot * 0.35) + "' y='" +
                       fmt(frame.y0 + frame.h + 18) +
                       "' font-size='11' text-anchor='middle'>" +
                       xml_escape(plot.bar_labels[i]) + "</text>\n";
            }
            break;
        }
    }

    detail::emit_labels(svg, plot, frame);
    svg += "</svg>\n";
    return svg;
}

inline void emit_svg(const SvgPlot& plot, const std::filesystem::path& path) {
    const std::string svg = render_svg(plot);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("emit_svg: cannot open " + path.string());
    out << svg;
    if (!out)
        throw std::runtime_error("emit_svg: write failed for " + path.string());
}

}  // namespace fraqtal
