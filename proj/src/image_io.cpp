#include "geikit/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "geikit/error.hpp"

namespace geikit {

namespace {

std::string lower_extension(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

[[noreturn]] void decode_fail(const std::filesystem::path& path, const std::string& why) {
    throw Error(ErrorCode::DecodeError, "dataset", path.string() + ": " + why);
}

struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void png_error_quiet(png_structp png, png_const_charp) { png_longjmp(png, 1); }
void png_warning_quiet(png_structp, png_const_charp) {}

GrayImage read_png(const std::filesystem::path& path) {
    FilePtr file(std::fopen(path.c_str(), "rb"));
    if (!file) {
        decode_fail(path, "cannot open");
    }
    png_byte sig[8];
    if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0) {
        decode_fail(path, "not a PNG file");
    }

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_quiet, png_warning_quiet);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        decode_fail(path, "libpng initialisation failed");
    }

    GrayImage image;
    std::vector<png_bytep> rows;
    // libpng reports errors by longjmp; nothing with a destructor may be
    // created between here and the end of decoding except the vectors above.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        decode_fail(path, "corrupt PNG data");
    }
    png_init_io(png, file.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_byte color = png_get_color_type(png, info);
    const png_byte depth = png_get_bit_depth(png, info);
    if (color == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (depth == 16) {
        png_set_strip_16(png);
    }
    if (color & PNG_COLOR_MASK_ALPHA) {
        png_set_strip_alpha(png);
    }
    if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA || color == PNG_COLOR_TYPE_PALETTE) {
        png_set_rgb_to_gray_fixed(png, 1, -1, -1);
    }
    png_read_update_info(png, info);

    image.height = png_get_image_height(png, info);
    image.width = png_get_image_width(png, info);
    if (png_get_rowbytes(png, info) != image.width) {
        png_destroy_read_struct(&png, &info, nullptr);
        decode_fail(path, "unsupported PNG layout");
    }
    image.pixels.resize(image.height * image.width);
    rows.resize(image.height);
    for (std::size_t r = 0; r < image.height; ++r) {
        rows[r] = image.pixels.data() + r * image.width;
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return image;
}

// Netpbm P1/P2/P4/P5, maxval <= 255.
GrayImage read_netpbm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        decode_fail(path, "cannot open");
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t pos = 0;

    auto skip_space = [&] {
        while (pos < data.size()) {
            if (data[pos] == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(data[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_uint = [&]() -> std::size_t {
        skip_space();
        if (pos >= data.size() || !std::isdigit(static_cast<unsigned char>(data[pos]))) {
            decode_fail(path, "malformed Netpbm header");
        }
        std::size_t v = 0;
        while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
            v = v * 10 + static_cast<std::size_t>(data[pos++] - '0');
            if (v > (1u << 24)) decode_fail(path, "Netpbm value out of range");
        }
        return v;
    };

    if (data.size() < 2 || data[0] != 'P') {
        decode_fail(path, "not a Netpbm file");
    }
    const char kind = data[1];
    if (kind != '1' && kind != '2' && kind != '4' && kind != '5') {
        decode_fail(path, "unsupported Netpbm variant");
    }
    pos = 2;
    GrayImage image;
    image.width = read_uint();
    image.height = read_uint();
    if (image.width == 0 || image.height == 0) {
        decode_fail(path, "empty image");
    }
    const bool bitmap = kind == '1' || kind == '4';
    const std::size_t maxval = bitmap ? 1 : read_uint();
    if (maxval == 0 || maxval > 255) {
        decode_fail(path, "unsupported maxval");
    }
    const std::size_t n = image.height * image.width;
    image.pixels.resize(n);
    auto scale = [&](std::size_t v) -> std::uint8_t {
        if (v > maxval) decode_fail(path, "sample exceeds maxval");
        return static_cast<std::uint8_t>(v * 255 / maxval);
    };

    if (kind == '1' || kind == '2') {
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t v;
            if (kind == '1') {
                skip_space();
                if (pos >= data.size() || (data[pos] != '0' && data[pos] != '1')) {
                    decode_fail(path, "truncated bitmap data");
                }
                v = data[pos++] == '1' ? 0 : 1;  // PBM: 1 is black
            } else {
                v = read_uint();
            }
            image.pixels[i] = scale(v);
        }
        return image;
    }

    ++pos;  // single whitespace after the header
    if (kind == '5') {
        if (data.size() < pos + n) {
            decode_fail(path, "truncated raster data");
        }
        for (std::size_t i = 0; i < n; ++i) {
            image.pixels[i] = scale(static_cast<unsigned char>(data[pos + i]));
        }
        return image;
    }
    const std::size_t row_bytes = (image.width + 7) / 8;
    if (data.size() < pos + row_bytes * image.height) {
        decode_fail(path, "truncated raster data");
    }
    for (std::size_t r = 0; r < image.height; ++r) {
        for (std::size_t c = 0; c < image.width; ++c) {
            const auto byte = static_cast<unsigned char>(data[pos + r * row_bytes + c / 8]);
            const bool black = (byte >> (7 - c % 8)) & 1;
            image.pixels[r * image.width + c] = black ? 0 : 255;
        }
    }
    return image;
}

}  // namespace

bool is_supported_image(const std::filesystem::path& path) {
    const auto ext = lower_extension(path);
    return ext == ".png" || ext == ".pgm" || ext == ".pbm";
}

GrayImage read_image(const std::filesystem::path& path) {
    const auto ext = lower_extension(path);
    if (ext == ".png") {
        return read_png(path);
    }
    if (ext == ".pgm" || ext == ".pbm") {
        return read_netpbm(path);
    }
    decode_fail(path, "unsupported image format");
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
    if (image.pixels.size() != image.height * image.width || image.pixels.empty()) {
        throw Error(ErrorCode::InvalidArgument, "dataset", "image buffer does not match dimensions");
    }
    FilePtr file(std::fopen(path.c_str(), "wb"));
    if (!file) {
        throw Error(ErrorCode::IoError, "dataset", "cannot write " + path.string());
    }
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_quiet, png_warning_quiet);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw Error(ErrorCode::IoError, "dataset", "libpng initialisation failed");
    }
    std::vector<png_bytep> rows(image.height);
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw Error(ErrorCode::IoError, "dataset", "failed writing " + path.string());
    }
    png_init_io(png, file.get());
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
                 PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (std::size_t r = 0; r < image.height; ++r) {
        rows[r] = const_cast<png_bytep>(image.pixels.data() + r * image.width);
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    if (std::fflush(file.get()) != 0) {
        throw Error(ErrorCode::IoError, "dataset", "failed writing " + path.string());
    }
}

}  // namespace geikit
