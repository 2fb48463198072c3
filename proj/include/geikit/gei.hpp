#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "geikit/cycle.hpp"
#include "geikit/silhouette.hpp"

namespace geikit {

// Per-pixel average of the binary frames of one gait cycle, values in [0,1].
class GaitEnergyImage {
public:
    // Throws InvalidArgument on a size mismatch or a value outside [0,1] (NaN included).
    GaitEnergyImage(std::size_t height, std::size_t width, std::vector<float> values);

    std::size_t height() const noexcept { return height_; }
    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return values_.size(); }
    float at(std::size_t row, std::size_t col) const { return values_[row * width_ + col]; }
    std::span<const float> values() const noexcept { return values_; }

    bool same_shape(const GaitEnergyImage& other) const noexcept {
        return height_ == other.height_ && width_ == other.width_;
    }

    // Bitwise comparison of the stored floats.
    friend bool operator==(const GaitEnergyImage& a, const GaitEnergyImage& b);

private:
    std::size_t height_;
    std::size_t width_;
    std::vector<float> values_;
};

// Dense real grid, for expectations and averages that are not GEIs themselves.
struct RealGrid {
    std::size_t height = 0;
    std::size_t width = 0;
    std::vector<double> values;
};

struct NoiseParams {
    double p = 0.0;           // per-pixel flip probability, [0, 0.5)
    std::uint64_t seed = 0;

    // Throws InvalidArgument unless 0 <= p < 0.5.
    void validate() const;
};

enum class Execution { Serial, Parallel };

// G(x,y) = (1/N) * sum_t B_t(x,y). Each stored value is the float nearest to
// k/N, where k is the integer foreground count at that pixel.
// Throws EmptyCycle for no frames and DimensionMismatch for unequal frames.
GaitEnergyImage compute_gei(std::span<const BinarySilhouette> frames,
                            Execution exec = Execution::Parallel);
GaitEnergyImage compute_gei(const GaitCycle& cycle, Execution exec = Execution::Parallel);

// Flips each foreground pixel to 0 and each background pixel to 1 with
// probability p, independently. Pixel i uses draw i of the stream keyed by
// params.seed, so the result is fixed by (frame, params).
BinarySilhouette inject_noise(const BinarySilhouette& frame, const NoiseParams& params,
                              Execution exec = Execution::Parallel);

// Frame t uses the child stream split(t) of params.seed.
std::vector<BinarySilhouette> inject_noise(std::span<const BinarySilhouette> frames,
                                           const NoiseParams& params,
                                           Execution exec = Execution::Parallel);

// Expected GEI of the noisy cycle: (1 - 2p) * G + p per pixel.
RealGrid expected_noisy_gei(const GaitEnergyImage& clean, double p);

}  // namespace geikit
