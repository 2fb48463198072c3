#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace geikit {

// One binary frame, row-major, 1 = foreground.
class BinarySilhouette {
public:
    // All-background frame.
    BinarySilhouette(std::size_t height, std::size_t width);
    // Throws InvalidArgument unless pixels.size() == height*width and every value is 0 or 1.
    BinarySilhouette(std::size_t height, std::size_t width, std::vector<std::uint8_t> pixels);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return pixels_.size(); }

    std::uint8_t at(std::size_t row, std::size_t col) const { return pixels_[row * width_ + col]; }
    void set(std::size_t row, std::size_t col, bool foreground) {
        pixels_[row * width_ + col] = foreground ? 1 : 0;
    }

    std::span<const std::uint8_t> pixels() const noexcept { return pixels_; }

    bool same_shape(const BinarySilhouette& other) const noexcept {
        return height_ == other.height_ && width_ == other.width_;
    }

    friend bool operator==(const BinarySilhouette&, const BinarySilhouette&) = default;

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<std::uint8_t> pixels_;
};

// Inclusive pixel rectangle.
struct Rect {
    std::size_t top;
    std::size_t left;
    std::size_t bottom;
    std::size_t right;

    std::size_t height() const noexcept { return bottom - top + 1; }
    std::size_t width() const noexcept { return right - left + 1; }

    friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Centering {
    TopHalfCentroid,  // centroid of the upper half of the ROI (head and torso)
    FullCentroid,
};

struct NormalizationParams {
    std::size_t target_height = 128;
    std::size_t target_width = 88;
    Centering centering = Centering::TopHalfCentroid;

    // Throws InvalidArgument when either target dimension is below 2.
    void validate() const;
};

std::optional<Rect> bounding_box(const BinarySilhouette& frame);

std::size_t foreground_count(const BinarySilhouette& frame);

// Crops the ROI, scales it to the target height with the aspect ratio kept,
// and places it so the chosen centroid column lands on target_width/2.
//
// Each output pixel covers a block of source pixels and is foreground when
// any of them is. Upscaling therefore degenerates to nearest neighbour, and
// no foreground row or column is ever dropped when downscaling, which keeps
// the output ROI exactly target_height tall.
//
// Throws EmptySilhouette for a blank frame and RoiTooWide when the scaled
// silhouette does not fit the target width.
BinarySilhouette normalize(const BinarySilhouette& frame, const NormalizationParams& params);

std::vector<BinarySilhouette> normalize_all(std::span<const BinarySilhouette> frames,
                                            const NormalizationParams& params);

}  // namespace geikit
