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
/// Minimal SHA-1 (RFC 3174) for content digests. Not for security use.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace fraqtal {

class Sha1 {
  public:
    Sha1() = default;

    void update(const void* data, std::size_t len) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        total_bits_ += static_cast<std::uint64_t>(len) * 8;
        while (len > 0) {
            std::size_t take = std::min<std::size_t>(64 - fill_, len);
            for (std::size_t i = 0; i < take; ++i) block_[fill_ + i] = p[i];
            fill_ += take;
            p += take;
            len -= take;
            if (fill_ == 64) {
                process_block();
                fill_ = 0;
            }
        }
    }

    void update(std::string_view s) { update(s.data(), s.size()); }

    /// Finalizes and returns the 40-char lowercase hex digest.
    std::string hex_digest() {
        std::uint64_t bits = total_bits_;
        const std::uint8_t pad = 0x80;
        update(&pad, 1);
        const std::uint8_t zero = 0x00;
        while (fill_ != 56) update(&zero, 1);
        std::uint8_t len_be[8];
        for (int i = 0; i < 8; ++i)
            len_be[i] = static_cast<std::uint8_t>(bits >> (56 - 8 * i));
        update(len_be, 8);

        static constexpr char kHex[] = "0123456789abcdef";
        std::string out(40, '0');
        for (int i = 0; i < 5; ++i) {
            for (int b = 0; b < 4; ++b) {
                std::uint8_t byte =
                    static_cast<std::uint8_t>(h_[i] >> (24 - 8 * b));
                out[8 * i + 2 * b] = kHex[byte >> 4];
                out[8 * i + 2 * b + 1] = kHex[byte & 0xF];
            }
        }
        return out;
    }

  private:
    static constexpr std::uint32_t rotl(std::uint32_t x, int n) {
        return (x << n) | (x >> (32 - n));
    }

    void process_block() {
        std::uint32_t w[80];
        for (int t = 0; t < 16; ++t) {
            w[t] = (std::uint32_t(block_[4 * t]) << 24) |
                   (std::uint32_t(block_[4 * t + 1]) << 16) |
                   (std::uint32_t(block_[4 * t + 2]) << 8) |
                   std::uint32_t(block_[4 * t + 3]);
        }
        for (int t = 16; t < 80; ++t)
            w[t] = rotl(w[t - 3] ^ w[t - 8] ^ w[t - 14] ^ w[t - 16], 1);

        std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4];
        for (int t = 0; t < 80; ++t) {
            std::uint32_t f, k;
            if (t < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999;
            } else if (t < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1;
            } else if (t < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDC;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6;
            }
            std::uint32_t tmp = rotl(a, 5) + f + e + k + w[t];
            e = d;
            d = c;
            c = rotl(b, 30);
            b = a;
            a = tmp;
        }
        h_[0] += a;
        h_[1] += b;
        h_[2] += c;
        h_[3] += d;
        h_[4] += e;
    }

    std::array<std::uint32_t, 5> h_{0x67452301, 0xEFCDAB89, 0x98BADCFE,
                                    0x10325476, 0xC3D2E1F0};
    std::array<std::uint8_t, 64> block_{};
    std::size_t fill_ = 0;
    std::uint64_t total_bits_ = 0;
};

inline std::string sha1_hex(std::string_view data) {
    Sha1 h;
    h.update(data);
    return h.hex_digest();
}

}  // namespace fraqtal
