#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace geikit {

// 8-bit grayscale raster, row-major.
struct GrayImage {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<std::uint8_t> pixels;
};

// Decodes PNG (any bit depth/colour type, converted to 8-bit luminance) or
// binary/ASCII PGM and PBM. Throws DecodeError naming the file.
GrayImage read_image(const std::filesystem::path& path);

// Writes an 8-bit grayscale PNG with no timestamp chunk, so equal pixels give
// equal bytes. Throws IoError.
void write_png(const std::filesystem::path& path, const GrayImage& image);

// True for the extensions read_image understands.
bool is_supported_image(const std::filesystem::path& path);

}  // namespace geikit
