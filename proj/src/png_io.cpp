#include "usaug/png_io.hpp"

#include <png.h>

#include <cstdio>
#include <memory>

#include "usaug/checksum.hpp"
#include "usaug/errors.hpp"

namespace usaug {

namespace {

struct FileCloser {
    void operator()(std::FILE* fp) const {
        if (fp) std::fclose(fp);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    PngReader() {
        png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
    PngReader(const PngReader&) = delete;
    PngReader& operator=(const PngReader&) = delete;
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    PngWriter() {
        png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
        if (png) info = png_create_info_struct(png);
    }
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
    PngWriter(const PngWriter&) = delete;
    PngWriter& operator=(const PngWriter&) = delete;
};

// libpng reports errors with longjmp, so the decode body lives in a
// noexcept helper that owns no C++ objects; buffers stay in the caller's
// frame and are only touched through references.
bool read_core(PngReader& ctx, std::FILE* fp, PngImage& out, std::vector<png_byte>& raw,
               std::vector<png_bytep>& rows, std::string& err) noexcept {
    if (setjmp(png_jmpbuf(ctx.png))) {
        err = "PNG decode failed";
        return false;
    }
    png_init_io(ctx.png, fp);
    png_read_info(ctx.png, ctx.info);

    png_uint_32 width = 0, height = 0;
    int bit_depth = 0, color_type = 0;
    png_get_IHDR(ctx.png, ctx.info, &width, &height, &bit_depth, &color_type, nullptr, nullptr,
                 nullptr);
    if (color_type != PNG_COLOR_TYPE_GRAY) {
        err = "not a grayscale PNG (color or alpha channels present)";
        return false;
    }
    if (width == 0 || height == 0 || width > 0x40000000u || height > 0x40000000u) {
        err = "unreasonable image dimensions";
        return false;
    }
    if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(ctx.png);
    png_read_update_info(ctx.png, ctx.info);

    const std::size_t rowbytes = png_get_rowbytes(ctx.png, ctx.info);
    raw.resize(rowbytes * height);
    rows.resize(height);
    for (png_uint_32 r = 0; r < height; ++r) rows[r] = raw.data() + rowbytes * r;
    png_read_image(ctx.png, rows.data());
    png_read_end(ctx.png, nullptr);

    out.height = static_cast<int>(height);
    out.width = static_cast<int>(width);
    out.bit_depth = bit_depth < 8 ? 8 : bit_depth;
    return true;
}

bool write_core(PngWriter& ctx, std::FILE* fp, int height, int width, int bit_depth,
                int color_type, std::vector<png_bytep>& rows, std::string& err) noexcept {
    if (setjmp(png_jmpbuf(ctx.png))) {
        err = "PNG encode failed";
        return false;
    }
    png_init_io(ctx.png, fp);
    png_set_compression_level(ctx.png, 6);
    png_set_filter(ctx.png, 0, PNG_FILTER_SUB);
    png_set_IHDR(ctx.png, ctx.info, static_cast<png_uint_32>(width),
                 static_cast<png_uint_32>(height), bit_depth, color_type, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    png_write_image(ctx.png, rows.data());
    png_write_end(ctx.png, nullptr);
    return true;
}

void write_png_file(const std::string& path, int height, int width, int bit_depth, int color_type,
                    std::vector<png_byte>& raw, std::size_t rowbytes) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw DataError(path + ": cannot open for writing");
    PngWriter ctx;
    if (!ctx.png || !ctx.info) throw DataError(path + ": libpng initialization failed");
    std::vector<png_bytep> rows(height);
    for (int r = 0; r < height; ++r) rows[r] = raw.data() + rowbytes * static_cast<std::size_t>(r);
    std::string err;
    if (!write_core(ctx, fp.get(), height, width, bit_depth, color_type, rows, err)) {
        throw DataError(path + ": " + err);
    }
    if (std::fflush(fp.get()) != 0) throw DataError(path + ": write failed");
}

}  // namespace

PngImage read_gray_png(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw DataError(path + ": cannot open");
    PngReader ctx;
    if (!ctx.png || !ctx.info) throw DataError(path + ": libpng initialization failed");

    PngImage out;
    std::vector<png_byte> raw;
    std::vector<png_bytep> rows;
    std::string err;
    if (!read_core(ctx, fp.get(), out, raw, rows, err)) {
        throw DataError(path + ": " + err);
    }

    const std::size_t n = static_cast<std::size_t>(out.height) * out.width;
    out.pixels.resize(n);
    if (out.bit_depth == 16) {
        for (std::size_t i = 0; i < n; ++i) {
            out.pixels[i] = static_cast<std::uint16_t>((raw[2 * i] << 8) | raw[2 * i + 1]);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) out.pixels[i] = raw[i];
    }
    return out;
}

void write_gray_png(const std::string& path, const PngImage& image) {
    if (image.bit_depth != 8 && image.bit_depth != 16) {
        throw DataError(path + ": unsupported bit depth " + std::to_string(image.bit_depth));
    }
    const std::size_t n = static_cast<std::size_t>(image.height) * image.width;
    const std::size_t rowbytes =
        static_cast<std::size_t>(image.width) * (image.bit_depth == 16 ? 2 : 1);
    std::vector<png_byte> raw(rowbytes * image.height);
    if (image.bit_depth == 16) {
        for (std::size_t i = 0; i < n; ++i) {
            raw[2 * i] = static_cast<png_byte>(image.pixels[i] >> 8);
            raw[2 * i + 1] = static_cast<png_byte>(image.pixels[i] & 0xff);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) raw[i] = static_cast<png_byte>(image.pixels[i] & 0xff);
    }
    write_png_file(path, image.height, image.width, image.bit_depth, PNG_COLOR_TYPE_GRAY, raw,
                   rowbytes);
}

void write_rgb8_png(const std::string& path, int height, int width,
                    const std::vector<std::uint8_t>& rgb) {
    const std::size_t expected = static_cast<std::size_t>(height) * width * 3;
    if (rgb.size() != expected) {
        throw DataError(path + ": RGB buffer size does not match dimensions");
    }
    const std::size_t rowbytes = static_cast<std::size_t>(width) * 3;
    std::vector<png_byte> raw(rgb.begin(), rgb.end());
    write_png_file(path, height, width, 8, PNG_COLOR_TYPE_RGB, raw, rowbytes);
}

ImageGrid to_unit_grid(const PngImage& image) {
    const double maxval = image.bit_depth == 16 ? 65535.0 : 255.0;
    ImageGrid grid(image.height, image.width);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        grid.data[i] = image.pixels[i] / maxval;
    }
    return grid;
}

PngImage from_unit_grid(const ImageGrid& grid, int bit_depth) {
    PngImage out;
    out.height = grid.height;
    out.width = grid.width;
    out.bit_depth = bit_depth;
    out.pixels.resize(grid.size());
    if (bit_depth == 16) {
        for (std::size_t i = 0; i < grid.data.size(); ++i) out.pixels[i] = quantize16(grid.data[i]);
    } else {
        for (std::size_t i = 0; i < grid.data.size(); ++i) out.pixels[i] = quantize8(grid.data[i]);
    }
    return out;
}

PngImage mask_to_png(const BoneMask& mask) {
    PngImage out;
    out.height = mask.height;
    out.width = mask.width;
    out.bit_depth = 8;
    out.pixels.resize(mask.size());
    for (std::size_t i = 0; i < mask.data.size(); ++i) out.pixels[i] = mask.data[i] ? 255 : 0;
    return out;
}

}  // namespace usaug
