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
 * Minimal PNG writer/reader over zlib.
 *
 * The writer emits exactly IHDR + one IDAT + IEND (8-bit RGB,
 * non-interlaced, filter 0 rows, fixed compression level) so identical
 * pixels always produce identical bytes. The reader handles the subset
 * needed to load those files back: 8-bit gray/RGB/RGBA, non-interlaced,
 * all five standard row filters.
 */
#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fraqtal/image.hpp"

namespace fraqtal {

namespace detail {

inline void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline std::uint32_t get_u32_be(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

inline void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                         const std::uint8_t* data, std::size_t len) {
    put_u32_be(out, static_cast<std::uint32_t>(len));
    const std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    if (len > 0) out.insert(out.end(), data, data + len);
    const std::uint32_t crc = static_cast<std::uint32_t>(
        ::crc32(0, out.data() + start, static_cast<uInt>(out.size() - start)));
    put_u32_be(out, crc);
}

inline int paeth_predictor(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

}  // namespace detail

inline constexpr std::uint8_t kPngSignature[8] = {0x89, 'P',  'N',  'G',
                                                  0x0D, 0x0A, 0x1A, 0x0A};

/// Encodes to an in-memory PNG (8-bit RGB, no alpha, no ancillary chunks).
inline std::vector<std::uint8_t> encode_png(const Rgb8Image& image) {
    if (image.width <= 0 || image.height <= 0 ||
        image.pixels.size() != 3ull * image.width * image.height)
        throw std::invalid_argument("encode_png: malformed image");

    const std::size_t stride = 3ull * image.width;
    std::vector<std::uint8_t> raw((stride + 1) * image.height);
    for (int y = 0; y < image.height; ++y) {
        std::uint8_t* row = &raw[(stride + 1) * y];
        row[0] = 0;  // filter type None on every row
        std::copy_n(&image.pixels[stride * y], stride, row + 1);
    }

    uLongf compressed_len = ::compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(compressed_len);
    if (::compress2(compressed.data(), &compressed_len, raw.data(),
                    static_cast<uLong>(raw.size()), 6) != Z_OK)
        throw std::runtime_error("encode_png: deflate failed");
    compressed.resize(compressed_len);

    std::vector<std::uint8_t> out;
    out.reserve(compressed.size() + 128);
    out.insert(out.end(), kPngSignature, kPngSignature + 8);

    std::vector<std::uint8_t> ihdr;
    detail::put_u32_be(ihdr, static_cast<std::uint32_t>(image.width));
    detail::put_u32_be(ihdr, static_cast<std::uint32_t>(image.height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(2);  // color type: truecolor
    ihdr.push_back(0);  // compression
    ihdr.push_back(0);  // filter method
    ihdr.push_back(0);  // non-interlaced
    detail::append_chunk(out, "IHDR", ihdr.data(), ihdr.size());
    detail::append_chunk(out, "IDAT", compressed.data(), compressed.size());
    detail::append_chunk(out, "IEND", nullptr, 0);
    return out;
}

inline void write_png(const Rgb8Image& image,
                      const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = encode_png(image);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("write_png: cannot open " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write_png: write failed for " + path.string());
}

/// Decodes an 8-bit gray/RGB/RGBA non-interlaced PNG to RGB.
inline Rgb8Image decode_png(const std::vector<std::uint8_t>& bytes,
                            const std::string& context = "png") {
    auto fail = [&context](const std::string& why) -> Rgb8Image {
        throw std::runtime_error("decode_png: " + why + " (" + context + ")");
    };

    if (bytes.size() < 8 ||
        !std::equal(kPngSignature, kPngSignature + 8, bytes.begin()))
        return fail("bad signature");

    std::uint32_t width = 0, height = 0;
    int channels = 0;
    std::vector<std::uint8_t> idat;
    std::size_t pos = 8;
    bool saw_end = false;
    while (pos + 12 <= bytes.size()) {
        const std::uint32_t len = detail::get_u32_be(&bytes[pos]);
        if (pos + 12ull + len > bytes.size()) return fail("truncated chunk");
        const char* type = reinterpret_cast<const char*>(&bytes[pos + 4]);
        const std::uint8_t* data = &bytes[pos + 8];
        const std::uint32_t want_crc = detail::get_u32_be(&bytes[pos + 8 + len]);
        const std::uint32_t got_crc = static_cast<std::uint32_t>(
            ::crc32(0, &bytes[pos + 4], static_cast<uInt>(4 + len)));
        if (want_crc != got_crc) return fail("chunk crc mismatch");

        const std::string t(type, 4);
        if (t == "IHDR") {
            if (len != 13) return fail("bad IHDR");
            width = detail::get_u32_be(data);
            height = detail::get_u32_be(data + 4);
            const int bit_depth = data[8], color_type = data[9];
            if (bit_depth != 8) return fail("unsupported bit depth");
            if (data[12] != 0) return fail("interlaced image");
            switch (color_type) {
                case 0: channels = 1; break;
                case 2: channels = 3; break;
                case 6: channels = 4; break;
                default: return fail("unsupported color type");
            }
        } else if (t == "IDAT") {
            idat.insert(idat.end(), data, data + len);
        } else if (t == "IEND") {
            saw_end = true;
            break;
        }
        pos += 12ull + len;
    }
    if (width == 0 || height == 0 || channels == 0 || !saw_end || idat.empty())
        return fail("missing image data");

    const std::size_t stride = std::size_t(channels) * width;
    std::vector<std::uint8_t> raw((stride + 1) * height);
    uLongf raw_len = static_cast<uLongf>(raw.size());
    if (::uncompress(raw.data(), &raw_len, idat.data(),
                     static_cast<uLong>(idat.size())) != Z_OK ||
        raw_len != raw.size())
        return fail("inflate failed");

    // Undo per-row filters in place.
    const int bpp = channels;
    for (std::uint32_t y = 0; y < height; ++y) {
        std::uint8_t* row = &raw[(stride + 1) * y + 1];
        const std::uint8_t* prev =
            y > 0 ? &raw[(stride + 1) * (y - 1) + 1] : nullptr;
        const std::uint8_t filter = raw[(stride + 1) * y];
        for (std::size_t i = 0; i < stride; ++i) {
            const int left = i >= std::size_t(bpp) ? row[i - bpp] : 0;
            const int up = prev ? prev[i] : 0;
            const int up_left =
                (prev && i >= std::size_t(bpp)) ? prev[i - bpp] : 0;
            int add = 0;
            switch (filter) {
                case 0: break;
                case 1: add = left; break;
                case 2: add = up; break;
                case 3: add = (left + up) / 2; break;
                case 4: add = detail::paeth_predictor(left, up, up_left); break;
                default: return fail("unsupported row filter");
            }
            row[i] = static_cast<std::uint8_t>((row[i] + add) & 0xFF);
        }
    }

    Rgb8Image image(static_cast<int>(width), static_cast<int>(height));
    for (std::uint32_t y = 0; y < height; ++y) {
        const std::uint8_t* row = &raw[(stride + 1) * y + 1];
        for (std::uint32_t x = 0; x < width; ++x) {
            std::uint8_t* dst = image.at(static_cast<int>(x), static_cast<int>(y));
            if (channels == 1) {
                dst[0] = dst[1] = dst[2] = row[x];
            } else {
                dst[0] = row[std::size_t(channels) * x];
                dst[1] = row[std::size_t(channels) * x + 1];
                dst[2] = row[std::size_t(channels) * x + 2];
            }
        }
    }
    return image;
}

inline Rgb8Image read_png(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("read_png: cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return decode_png(bytes, path.string());
}

}  // namespace fraqtal
