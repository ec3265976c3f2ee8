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

/// @file
/// Row-major raster containers shared by the renderer and feature code.
#pragma once

#include <cstdint>
#include <vector>

namespace fraqtal {

struct Rgb8Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 3 bytes per pixel, row-major

    Rgb8Image() = default;
    Rgb8Image(int w, int h) : width(w), height(h), pixels(3ull * w * h) {}

    std::uint8_t* at(int x, int y) { return &pixels[3ull * (std::size_t(y) * width + x)]; }
    const std::uint8_t* at(int x, int y) const {
        return &pixels[3ull * (std::size_t(y) * width + x)];
    }
};

struct Gray8Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Gray8Image() = default;
    Gray8Image(int w, int h) : width(w), height(h), pixels(std::size_t(w) * h) {}

    std::uint8_t at(int x, int y) const { return pixels[std::size_t(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[std::size_t(y) * width + x]; }
};

struct BitMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // one byte per pixel, 0 or 1

    BitMask() = default;
    BitMask(int w, int h) : width(w), height(h), bits(std::size_t(w) * h, 0) {}

    bool at(int x, int y) const { return bits[std::size_t(y) * width + x] != 0; }
    void set(int x, int y, bool on) {
        bits[std::size_t(y) * width + x] = on ? 1 : 0;
    }
};

}  // namespace fraqtal
