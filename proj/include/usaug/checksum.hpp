#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "usaug/grid.hpp"

namespace usaug {

// FNV-1a, 64 bit. Manifest checksums hash decoded pixel buffers rather
// than file bytes so metadata-only changes cannot break replay checks.
inline std::uint64_t fnv1a64(const std::uint8_t* bytes, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
    for (std::size_t i = 0; i < n; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::uint16_t quantize16(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return static_cast<std::uint16_t>(std::lround(v * 65535.0));
}

inline std::uint8_t quantize8(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return static_cast<std::uint8_t>(std::lround(v * 255.0));
}

// Hash of the quantized sample values a PNG reader would decode:
// dimensions, then row-major samples (u16 little-endian or u8).
inline std::uint64_t checksum_image(const BModeImage& img, int bit_depth) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    std::uint32_t dims[2] = {static_cast<std::uint32_t>(img.height), static_cast<std::uint32_t>(img.width)};
    h = fnv1a64(reinterpret_cast<const std::uint8_t*>(dims), sizeof(dims), h);
    if (bit_depth == 16) {
        for (double v : img.data) {
            std::uint16_t q = quantize16(v);
            std::uint8_t b[2] = {static_cast<std::uint8_t>(q & 0xff), static_cast<std::uint8_t>(q >> 8)};
            h = fnv1a64(b, 2, h);
        }
    } else {
        for (double v : img.data) {
            std::uint8_t q = quantize8(v);
            h = fnv1a64(&q, 1, h);
        }
    }
    return h;
}

// Masks are stored as 8-bit {0, 255}.
inline std::uint64_t checksum_mask(const BoneMask& mask) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    std::uint32_t dims[2] = {static_cast<std::uint32_t>(mask.height), static_cast<std::uint32_t>(mask.width)};
    h = fnv1a64(reinterpret_cast<const std::uint8_t*>(dims), sizeof(dims), h);
    for (std::uint8_t v : mask.data) {
        std::uint8_t q = v ? 255 : 0;
        h = fnv1a64(&q, 1, h);
    }
    return h;
}

}  // namespace usaug
