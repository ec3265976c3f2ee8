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
 * 256-entry RGB lookup tables for the five supported palettes. Viridis,
 * magma and plasma are baked from their published definitions
 * (colormap_tables.hpp); turbo is sampled from its published polynomial
 * fit; rainbow is an HSV sweep (hue 0..300 degrees, S = V = 1).
 */
#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fraqtal/colormap_tables.hpp"

namespace fraqtal {

// Order matters: seeded palette draws index this enum modulo kCmapCount.
enum class CmapName { Turbo = 0, Viridis, Rainbow, Magma, Plasma };
inline constexpr int kCmapCount = 5;

inline const char* cmap_name_string(CmapName name) {
    switch (name) {
        case CmapName::Turbo: return "turbo";
        case CmapName::Viridis: return "viridis";
        case CmapName::Rainbow: return "rainbow";
        case CmapName::Magma: return "magma";
        case CmapName::Plasma: return "plasma";
    }
    return "?";
}

inline std::optional<CmapName> parse_cmap_name(std::string_view s) {
    for (int i = 0; i < kCmapCount; ++i) {
        const auto name = static_cast<CmapName>(i);
        if (s == cmap_name_string(name)) return name;
    }
    return std::nullopt;
}

struct ColorMap {
    CmapName name = CmapName::Turbo;
    std::array<std::array<std::uint8_t, 3>, 256> lut{};
};

namespace detail {

inline std::uint8_t to_channel(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return static_cast<std::uint8_t>(std::lround(255.0 * v));
}

// Fifth-order polynomial fit of the turbo colormap (Mikhailov 2019).
inline std::array<std::uint8_t, 3> turbo_at(double t) {
    constexpr double r[6] = {0.13572138, 4.61539260,   -42.66032258,
                             132.13108234, -152.94239396, 59.28637943};
    constexpr double g[6] = {0.09140261, 2.19418839, 4.84296658,
                             -14.18503333, 4.27729857, 2.82956604};
    constexpr double b[6] = {0.10667330, 12.64194608,  -60.58204836,
                             110.36276771, -89.90310912, 27.34824973};
    auto poly = [t](const double (&k)[6]) {
        return k[0] + t * (k[1] + t * (k[2] + t * (k[3] + t * (k[4] + t * k[5]))));
    };
    return {to_channel(poly(r)), to_channel(poly(g)), to_channel(poly(b))};
}

inline std::array<std::uint8_t, 3> hsv_at(double hue_deg) {
    // S = V = 1: c = 1, m = 0.
    const double h = hue_deg / 60.0;
    const double x = 1.0 - std::fabs(std::fmod(h, 2.0) - 1.0);
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(h)) {
        case 0: r = 1; g = x; break;
        case 1: r = x; g = 1; break;
        case 2: g = 1; b = x; break;
        case 3: g = x; b = 1; break;
        case 4: r = x; b = 1; break;
        default: r = 1; b = x; break;
    }
    return {to_channel(r), to_channel(g), to_channel(b)};
}

}  // namespace detail

inline ColorMap colormap(CmapName name) {
    ColorMap cmap;
    cmap.name = name;
    switch (name) {
        case CmapName::Viridis: cmap.lut = detail::kViridisTable; break;
        case CmapName::Magma: cmap.lut = detail::kMagmaTable; break;
        case CmapName::Plasma: cmap.lut = detail::kPlasmaTable; break;
        case CmapName::Turbo:
            for (int i = 0; i < 256; ++i)
                cmap.lut[i] = detail::turbo_at(i / 255.0);
            break;
        case CmapName::Rainbow:
            for (int i = 0; i < 256; ++i)
                cmap.lut[i] = detail::hsv_at(300.0 * i / 255.0);
            break;
    }
    return cmap;
}

}  // namespace fraqtal
