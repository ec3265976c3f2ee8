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
 * Per-image scalar features: box-counting fractal dimension of the
 * Otsu-binarized image, gliding-box lacunarity of the grayscale image,
 * and grayscale energy (sum of squared intensities).
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fraqtal/image.hpp"

namespace fraqtal {

struct FeatureVector {
    double fractal_dimension = 0.0;
    double lacunarity = 0.0;
    double energy = 0.0;
};

/// ITU-R BT.601 luma: gray = round(0.299 R + 0.587 G + 0.114 B).
inline Gray8Image to_grayscale(const Rgb8Image& image) {
    Gray8Image gray(image.width, image.height);
    for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
        const std::uint8_t* rgb = &image.pixels[3 * i];
        gray.pixels[i] = static_cast<std::uint8_t>(
            std::lround(0.299 * rgb[0] + 0.587 * rgb[1] + 0.114 * rgb[2]));
    }
    return gray;
}

/// Otsu threshold over the intensity histogram, or -1 when the histogram
/// is single-valued (no threshold separates anything).
inline int otsu_threshold(const Gray8Image& gray) {
    std::array<std::uint64_t, 256> hist{};
    for (std::uint8_t v : gray.pixels) ++hist[v];

    int distinct = 0;
    for (std::uint64_t h : hist)
        if (h > 0) ++distinct;
    if (distinct < 2) return -1;

    const double total = static_cast<double>(gray.pixels.size());
    double total_mean = 0.0;
    for (int v = 0; v < 256; ++v) total_mean += v * static_cast<double>(hist[v]);
    total_mean /= total;

    int best_threshold = 0;
    double best_variance = -1.0;
    double w0 = 0.0, sum0 = 0.0;
    for (int t = 0; t < 255; ++t) {
        w0 += static_cast<double>(hist[t]) / total;
        sum0 += t * static_cast<double>(hist[t]) / total;
        const double w1 = 1.0 - w0;
        if (w0 <= 0.0 || w1 <= 0.0) continue;
        const double mean0 = sum0 / w0;
        const double mean1 = (total_mean - sum0) / w1;
        const double between = w0 * w1 * (mean0 - mean1) * (mean0 - mean1);
        if (between > best_variance) {
            best_variance = between;
            best_threshold = t;
        }
    }
    return best_threshold;
}

/// Pixel on <=> intensity > Otsu threshold.
inline BitMask binarize(const Gray8Image& gray) {
    BitMask mask(gray.width, gray.height);
    const int threshold = otsu_threshold(gray);
    if (threshold < 0) return mask;  // single-valued image: all off
    for (std::size_t i = 0; i < gray.pixels.size(); ++i)
        mask.bits[i] = gray.pixels[i] > threshold ? 1 : 0;
    return mask;
}

/**
 * Box-counting dimension: least-squares slope of ln N(eps) versus
 * ln(1/eps), where N(eps) counts occupied cells of a (0,0)-anchored grid
 * (edge cells included) over the dyadic ladder eps in {2, 4, ..., <=
 * min(W,H)/4}. The ladder starts at 2: at eps = 1 the count is just the
 * on-pixel total, which measures density rather than covering decay and
 * biases the fit low on dense masks.
 */
inline double box_count_dimension(const BitMask& mask) {
    if (mask.width < 64 || mask.height < 64)
        throw std::invalid_argument("box_count_dimension: mask must be at least 64x64");

    bool any_on = false;
    for (std::uint8_t b : mask.bits)
        if (b) {
            any_on = true;
            break;
        }
    if (!any_on)
        throw std::domain_error("box_count_dimension: empty mask");

    const int limit = std::min(mask.width, mask.height) / 4;
    std::vector<double> log_inv_eps, log_count;
    for (int eps = 2; eps <= limit; eps *= 2) {
        const int cells_x = (mask.width + eps - 1) / eps;
        const int cells_y = (mask.height + eps - 1) / eps;
        std::uint64_t occupied = 0;
        for (int cy = 0; cy < cells_y; ++cy) {
            const int y0 = cy * eps;
            const int y1 = std::min(y0 + eps, mask.height);
            for (int cx = 0; cx < cells_x; ++cx) {
                const int x0 = cx * eps;
                const int x1 = std::min(x0 + eps, mask.width);
                bool hit = false;
                for (int y = y0; y < y1 && !hit; ++y) {
                    const std::uint8_t* row = &mask.bits[std::size_t(y) * mask.width];
                    for (int x = x0; x < x1; ++x)
                        if (row[x]) {
                            hit = true;
                            break;
                        }
                }
                if (hit) ++occupied;
            }
        }
        log_inv_eps.push_back(-std::log(static_cast<double>(eps)));
        log_count.push_back(std::log(static_cast<double>(occupied)));
    }

    const std::size_t n = log_inv_eps.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += log_inv_eps[i];
        mean_y += log_count[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (log_inv_eps[i] - mean_x) * (log_count[i] - mean_y);
        sxx += (log_inv_eps[i] - mean_x) * (log_inv_eps[i] - mean_x);
    }
    return sxy / sxx;
}

/**
 * Gliding-box lacunarity: slide a box x box window with the given stride,
 * take the window mass M (sum of intensities), and return
 * Var(M) / Mean(M)^2 (population variance). Zero-mass images give 0.
 */
inline double gliding_box_lacunarity(const Gray8Image& gray, int box = 32,
                                     int stride = 16) {
    if (box <= 0 || box > std::min(gray.width, gray.height))
        throw std::invalid_argument("gliding_box_lacunarity: box exceeds image");
    if (stride < 1)
        throw std::invalid_argument("gliding_box_lacunarity: stride must be >= 1");

    // Summed-area table so each window mass is four lookups.
    const int w = gray.width, h = gray.height;
    std::vector<std::uint64_t> integral(std::size_t(w + 1) * (h + 1), 0);
    for (int y = 0; y < h; ++y) {
        std::uint64_t row_sum = 0;
        for (int x = 0; x < w; ++x) {
            row_sum += gray.at(x, y);
            integral[std::size_t(y + 1) * (w + 1) + (x + 1)] =
                integral[std::size_t(y) * (w + 1) + (x + 1)] + row_sum;
        }
    }
    auto window_mass = [&](int x, int y) {
        return integral[std::size_t(y + box) * (w + 1) + (x + box)] -
               integral[std::size_t(y) * (w + 1) + (x + box)] -
               integral[std::size_t(y + box) * (w + 1) + x] +
               integral[std::size_t(y) * (w + 1) + x];
    };

    double sum = 0.0, sum_sq = 0.0;
    std::uint64_t windows = 0;
    for (int y = 0; y + box <= h; y += stride) {
        for (int x = 0; x + box <= w; x += stride) {
            const double mass = static_cast<double>(window_mass(x, y));
            sum += mass;
            sum_sq += mass * mass;
            ++windows;
        }
    }
    const double mean = sum / static_cast<double>(windows);
    if (mean == 0.0) return 0.0;
    const double variance =
        sum_sq / static_cast<double>(windows) - mean * mean;
    return std::max(variance, 0.0) / (mean * mean);
}

/// Sum of squared grayscale intensities.
inline double image_energy(const Gray8Image& gray) {
    double energy = 0.0;
    for (std::uint8_t v : gray.pixels)
        energy += static_cast<double>(v) * static_cast<double>(v);
    return energy;
}

/// All three features for one image. Throws std::domain_error when the
/// binarized mask is empty (fractal dimension undefined).
inline FeatureVector extract_features(const Rgb8Image& image) {
    const Gray8Image gray = to_grayscale(image);
    FeatureVector features;
    features.fractal_dimension = box_count_dimension(binarize(gray));
    features.lacunarity = gliding_box_lacunarity(gray);
    features.energy = image_energy(gray);
    return features;
}

}  // namespace fraqtal
