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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fraqtal/features.hpp"
#include "fraqtal/rng.hpp"

using namespace fraqtal;

namespace {

Gray8Image constant_gray(int w, int h, std::uint8_t value) {
    Gray8Image gray(w, h);
    std::fill(gray.pixels.begin(), gray.pixels.end(), value);
    return gray;
}

BitMask full_mask(int w, int h) {
    BitMask mask(w, h);
    std::fill(mask.bits.begin(), mask.bits.end(), std::uint8_t{1});
    return mask;
}

/// Sierpinski carpet occupancy test without building the level-by-level
/// mask: a cell is removed iff some base-3 digit pair of (x, y) is (1, 1).
bool carpet_on(int x, int y, int level) {
    for (int i = 0; i < level; ++i) {
        if (x % 3 == 1 && y % 3 == 1) return false;
        x /= 3;
        y /= 3;
    }
    return true;
}

}  // namespace

TEST_CASE("grayscale conversion uses the BT.601 weights", "[features]") {
    Rgb8Image image(3, 1);
    const std::uint8_t colors[3][3] = {{255, 255, 255}, {0, 0, 0}, {255, 0, 0}};
    for (int x = 0; x < 3; ++x)
        for (int ch = 0; ch < 3; ++ch) image.at(x, 0)[ch] = colors[x][ch];

    const Gray8Image gray = to_grayscale(image);
    CHECK(gray.at(0, 0) == 255);
    CHECK(gray.at(1, 0) == 0);
    CHECK(gray.at(2, 0) == 76);  // round(0.299 * 255)
}

TEST_CASE("single-valued images binarize to an empty mask", "[features]") {
    const BitMask mask = binarize(constant_gray(16, 16, 0));
    for (std::uint8_t bit : mask.bits) REQUIRE(bit == 0);

    const BitMask bright = binarize(constant_gray(16, 16, 200));
    for (std::uint8_t bit : bright.bits) REQUIRE(bit == 0);
}

TEST_CASE("Otsu separates a two-level image at the gap", "[features]") {
    Gray8Image gray(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) gray.at(x, y) = x < 8 ? 0 : 255;
    const BitMask mask = binarize(gray);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) REQUIRE(mask.at(x, y) == (x >= 8));
}

TEST_CASE("Otsu picks the midpoint of a 100/200 mixture", "[features]") {
    Gray8Image gray(16, 16);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x) gray.at(x, y) = (x + y) % 2 ? 200 : 100;
    const BitMask mask = binarize(gray);
    for (int y = 0; y < 16; ++y)
        for (int x = 0; x < 16; ++x)
            REQUIRE(mask.at(x, y) == ((x + y) % 2 == 1));
}

TEST_CASE("a filled square has dimension 2", "[features]") {
    CHECK(box_count_dimension(full_mask(256, 256)) ==
          Catch::Approx(2.0).margin(0.02));
}

TEST_CASE("doubling the resolution keeps the filled square at 2", "[features]") {
    CHECK(box_count_dimension(full_mask(512, 512)) ==
          Catch::Approx(2.0).margin(0.02));
}

TEST_CASE("a horizontal line has dimension 1", "[features]") {
    BitMask mask(256, 256);
    for (int x = 0; x < 256; ++x) mask.set(x, 128, true);
    CHECK(box_count_dimension(mask) == Catch::Approx(1.0).margin(0.05));
}

TEST_CASE("the level-5 Sierpinski carpet lands near log 8 / log 3", "[features]") {
    BitMask mask(243, 243);
    for (int y = 0; y < 243; ++y)
        for (int x = 0; x < 243; ++x) mask.set(x, y, carpet_on(x, y, 5));

    std::size_t on = 0;
    for (std::uint8_t bit : mask.bits) on += bit;
    REQUIRE(on == 32768);  // 8^5 retained cells

    const double theory = std::log(8.0) / std::log(3.0);
    CHECK(box_count_dimension(mask) == Catch::Approx(theory).margin(0.05));
}

TEST_CASE("degenerate masks are feature errors", "[features]") {
    CHECK_THROWS_AS(box_count_dimension(BitMask(256, 256)), std::domain_error);
    CHECK_THROWS_AS(box_count_dimension(full_mask(32, 32)),
                    std::invalid_argument);
}

TEST_CASE("constant images have zero lacunarity", "[features]") {
    CHECK(gliding_box_lacunarity(constant_gray(64, 64, 180)) == 0.0);
    CHECK(gliding_box_lacunarity(constant_gray(64, 64, 0)) == 0.0);
}

TEST_CASE("a two-level split gives lacunarity 1", "[features]") {
    // box = stride = W/2: window masses are {0, M, 0, M}.
    Gray8Image gray(64, 64);
    for (int y = 0; y < 64; ++y)
        for (int x = 0; x < 64; ++x) gray.at(x, y) = x < 32 ? 0 : 255;
    CHECK(gliding_box_lacunarity(gray, 32, 32) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("lacunarity is never negative", "[features]") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        Gray8Image gray(64, 64);
        for (std::uint8_t& px : gray.pixels)
            px = static_cast<std::uint8_t>(rng.next_below(256));
        REQUIRE(gliding_box_lacunarity(gray) >= 0.0);
    }
}

TEST_CASE("lacunarity parameter validation", "[features]") {
    CHECK_THROWS_AS(gliding_box_lacunarity(constant_gray(16, 16, 1), 32, 16),
                    std::invalid_argument);
    CHECK_THROWS_AS(gliding_box_lacunarity(constant_gray(64, 64, 1), 32, 0),
                    std::invalid_argument);
}

TEST_CASE("image energy is the sum of squared intensities", "[features]") {
    CHECK(image_energy(constant_gray(8, 8, 0)) == 0.0);
    CHECK(image_energy(constant_gray(2, 2, 255)) == 4.0 * 65025.0);
}

TEST_CASE("brightening any pixel strictly increases energy", "[features]") {
    Gray8Image gray = constant_gray(16, 16, 100);
    const double base = image_energy(gray);
    gray.at(5, 7) = 101;
    CHECK(image_energy(gray) > base);
}

TEST_CASE("energy magnitude matches the reported corpus scale", "[features]") {
    // An 800x800 image with mean intensity near 125 has energy near 1e10.
    const double energy = image_energy(constant_gray(800, 800, 125));
    CHECK(energy == Catch::Approx(1.0e10).epsilon(0.01));
    CHECK(energy >= 6.4e9);
    CHECK(energy <= 1.64e10);
}

TEST_CASE("extract_features combines the three scalars", "[features]") {
    Gray8Image gray(64, 64);
    SplitMix64 rng(5);
    for (std::uint8_t& px : gray.pixels)
        px = static_cast<std::uint8_t>(rng.next_below(256));
    Rgb8Image image(64, 64);
    for (std::size_t i = 0; i < gray.pixels.size(); ++i) {
        image.pixels[3 * i] = gray.pixels[i];
        image.pixels[3 * i + 1] = gray.pixels[i];
        image.pixels[3 * i + 2] = gray.pixels[i];
    }
    const FeatureVector fv = extract_features(image);
    CHECK(fv.fractal_dimension > 0.0);
    CHECK(fv.fractal_dimension < 2.1);
    CHECK(fv.lacunarity >= 0.0);
    CHECK(fv.energy == image_energy(to_grayscale(image)));
}
