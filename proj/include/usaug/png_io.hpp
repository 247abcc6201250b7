#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "usaug/grid.hpp"

namespace usaug {

// Raw grayscale PNG payload. Samples are stored as uint16 regardless of
// bit depth; for 8-bit files values stay within [0, 255].
struct PngImage {
    int height = 0;
    int width = 0;
    int bit_depth = 8;  // 8 or 16
    std::vector<std::uint16_t> pixels;
};

// Decodes a grayscale PNG (1/2/4-bit files are expanded to 8). Color or
// alpha channels are rejected. Throws DataError.
PngImage read_gray_png(const std::string& path);

// Encodes a grayscale PNG with fixed settings, so identical pixels always
// produce identical bytes. Throws DataError on I/O or encoder failure.
void write_gray_png(const std::string& path, const PngImage& image);

// 8-bit RGB writer for montages. rgb is row-major, 3 bytes per pixel.
void write_rgb8_png(const std::string& path, int height, int width,
                    const std::vector<std::uint8_t>& rgb);

// Normalizes raw samples to [0, 1] by the bit depth's full-scale value.
ImageGrid to_unit_grid(const PngImage& image);

// Quantizes a unit-range grid to 8 or 16 bits (round half away from zero,
// clamped), matching the checksum quantization.
PngImage from_unit_grid(const ImageGrid& grid, int bit_depth);

// Renders a mask as an 8-bit {0, 255} PNG payload.
PngImage mask_to_png(const BoneMask& mask);

}  // namespace usaug
