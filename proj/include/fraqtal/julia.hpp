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
 * Smooth escape-time rendering of z <- z^d + c.
 *
 * Escaping points get the fractional escape count
 * nu = n + 1 - log_d(ln|z_n| / ln R), which removes integer banding. The
 * per-pixel field value is the histogram-equalized rank of nu among the
 * frame's escaping pixels: escape counts are heavily skewed toward small
 * n, and rank coloring spreads the gradient evenly across the palette
 * regardless of c (the standard histogram-coloring technique). Equal nu
 * maps to equal value, so the rank pass preserves determinism and the
 * field's symmetries. Non-escaping (interior) pixels hold exactly 1.0,
 * strictly above every escaping pixel.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "fraqtal/colormap.hpp"
#include "fraqtal/image.hpp"

namespace fraqtal {

struct Viewport {
    double re_min = -1.5;
    double re_max = 1.5;
    double im_min = -1.5;
    double im_max = 1.5;
};

struct RenderSpec {
    int width = 512;
    int height = 512;
    int max_iter = 300;
    double escape_radius = 4.0;
    std::complex<double> c{0.0, 0.0};
    int power = 2;
    Viewport viewport{};
};

inline void validate(const RenderSpec& spec) {
    if (spec.width < 16 || spec.height < 16)
        throw std::invalid_argument("render spec: width and height must be >= 16");
    if (spec.max_iter < 10)
        throw std::invalid_argument("render spec: max_iter must be >= 10");
    if (!(spec.escape_radius > 1.0))
        throw std::invalid_argument("render spec: escape radius must be > 1");
    if (spec.power < 2)
        throw std::invalid_argument("render spec: power must be >= 2");
    if (!(spec.viewport.re_min < spec.viewport.re_max) ||
        !(spec.viewport.im_min < spec.viewport.im_max))
        throw std::invalid_argument("render spec: empty viewport");
}

struct SmoothField {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // row-major, each in [0, 1]

    double at(int x, int y) const { return values[std::size_t(y) * width + x]; }
};

/**
 * Smooth escape value for one starting point, or nullopt when the orbit
 * stays inside the escape radius for z_0..z_max_iter. The returned nu is
 * un-normalized and clamped below at 0.
 */
inline std::optional<double> escape_time_point(std::complex<double> z0,
                                               std::complex<double> c, int d,
                                               double escape_radius,
                                               int max_iter) {
    const double radius_sq = escape_radius * escape_radius;
    const double log_radius = std::log(escape_radius);
    const double log_power = std::log(static_cast<double>(d));

    double x = z0.real(), y = z0.imag();
    for (int n = 0; n <= max_iter; ++n) {
        const double norm_sq = x * x + y * y;
        if (norm_sq > radius_sq) {
            const double log_abs = 0.5 * std::log(norm_sq);
            const double nu =
                n + 1.0 - std::log(log_abs / log_radius) / log_power;
            return std::max(nu, 0.0);
        }
        // z^d by repeated multiplication; exact sign symmetry for even d.
        double zx = x, zy = y;
        if (d == 2) {
            zx = x * x - y * y;
            zy = 2.0 * x * y;
        } else {
            for (int k = 1; k < d; ++k) {
                const double nx = zx * x - zy * y;
                zy = zx * y + zy * x;
                zx = nx;
            }
        }
        x = zx + c.real();
        y = zy + c.imag();
    }
    return std::nullopt;
}

namespace detail {

/// Pixel center in the complex plane; top row maps to the largest
/// imaginary part. The centered form makes origin-symmetric viewports
/// produce exactly negated z0 for 180deg-rotated pixel pairs.
inline std::complex<double> pixel_center(const RenderSpec& spec, int px,
                                         int py) {
    const Viewport& v = spec.viewport;
    const double center_re = 0.5 * (v.re_min + v.re_max);
    const double center_im = 0.5 * (v.im_min + v.im_max);
    const double step_re = (v.re_max - v.re_min) / spec.width;
    const double step_im = (v.im_max - v.im_min) / spec.height;
    return {center_re + (px + 0.5 - 0.5 * spec.width) * step_re,
            center_im + (0.5 * spec.height - py - 0.5) * step_im};
}

}  // namespace detail

/**
 * Renders the smooth field. Pixel-pure: each value depends only on its own
 * pixel center, so any row partition across `threads` workers yields
 * bit-identical output. threads <= 1 renders serially.
 */
inline SmoothField render_field(const RenderSpec& spec, int threads = 1) {
    validate(spec);
    const std::size_t n_pixels = std::size_t(spec.width) * spec.height;
    // Raw smooth values first; interior marked with an out-of-band value.
    constexpr double kInterior = -1.0;
    SmoothField field{spec.width, spec.height, std::vector<double>(n_pixels)};

    auto render_rows = [&](int row_begin, int row_end) {
        for (int py = row_begin; py < row_end; ++py) {
            double* row = &field.values[std::size_t(py) * spec.width];
            for (int px = 0; px < spec.width; ++px) {
                const auto z0 = detail::pixel_center(spec, px, py);
                const auto nu = escape_time_point(z0, spec.c, spec.power,
                                                  spec.escape_radius,
                                                  spec.max_iter);
                row[px] = nu ? *nu : kInterior;
            }
        }
    };

    if (threads <= 1) {
        render_rows(0, spec.height);
    } else {
        const int workers = std::min(threads, spec.height);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            const int begin =
                static_cast<int>(std::int64_t(spec.height) * w / workers);
            const int end =
                static_cast<int>(std::int64_t(spec.height) * (w + 1) / workers);
            pool.emplace_back(render_rows, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    // Histogram-equalization pass: value = rank of nu among escaping
    // pixels, scaled to [0, 1). Order-independent, so the result does not
    // depend on the render schedule.
    std::vector<double> escaping;
    escaping.reserve(n_pixels);
    for (double v : field.values)
        if (v != kInterior) escaping.push_back(v);
    std::sort(escaping.begin(), escaping.end());

    for (double& v : field.values) {
        if (v == kInterior) {
            v = 1.0;
        } else if (escaping.size() < 2) {
            v = 0.0;
        } else {
            const auto it =
                std::lower_bound(escaping.begin(), escaping.end(), v);
            v = static_cast<double>(it - escaping.begin()) /
                static_cast<double>(escaping.size());
        }
    }
    return field;
}

/// Maps field values through the 256-entry LUT: color = lut[round(v*255)].
inline Rgb8Image colorize(const SmoothField& field, const ColorMap& cmap) {
    Rgb8Image image(field.width, field.height);
    for (std::size_t i = 0; i < field.values.size(); ++i) {
        const auto& rgb = cmap.lut[static_cast<std::size_t>(
            std::lround(field.values[i] * 255.0))];
        image.pixels[3 * i] = rgb[0];
        image.pixels[3 * i + 1] = rgb[1];
        image.pixels[3 * i + 2] = rgb[2];
    }
    return image;
}

}  // namespace fraqtal
