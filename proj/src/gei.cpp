#include "geikit/gei.hpp"

#include <cmath>
#include <cstring>
#include <string>

#include "geikit/error.hpp"
#include "geikit/kernels.hpp"

namespace geikit {

GaitEnergyImage::GaitEnergyImage(std::size_t height, std::size_t width, std::vector<float> values)
    : height_(height), width_(width), values_(std::move(values)) {
    if (height_ == 0 || width_ == 0 || values_.size() != height_ * width_) {
        throw Error(ErrorCode::InvalidArgument, "gei", "value count does not match dimensions");
    }
    for (float v : values_) {
        if (!(v >= 0.0f && v <= 1.0f)) {
            throw Error(ErrorCode::InvalidArgument, "gei", "GEI value outside [0,1]");
        }
    }
}

bool operator==(const GaitEnergyImage& a, const GaitEnergyImage& b) {
    return a.height_ == b.height_ && a.width_ == b.width_ &&
           std::memcmp(a.values_.data(), b.values_.data(), a.values_.size() * sizeof(float)) == 0;
}

void NoiseParams::validate() const {
    if (!(p >= 0.0 && p < 0.5)) {
        throw Error(ErrorCode::InvalidArgument, "gei", "noise probability must lie in [0, 0.5)");
    }
}

GaitEnergyImage compute_gei(std::span<const BinarySilhouette> frames, Execution exec) {
    if (frames.empty()) {
        throw Error(ErrorCode::EmptyCycle, "gei", "no frames to average");
    }
    const auto& first = frames.front();
    std::vector<kernels::FrameView> views;
    views.reserve(frames.size());
    for (const auto& f : frames) {
        if (!f.same_shape(first)) {
            throw Error(ErrorCode::DimensionMismatch, "gei",
                        std::to_string(f.height()) + "x" + std::to_string(f.width()) + " vs " +
                            std::to_string(first.height()) + "x" + std::to_string(first.width()));
        }
        views.push_back(f.pixels());
    }

    std::vector<std::uint32_t> counts(first.size());
    if (exec == Execution::Serial) {
        kernels::serial::accumulate(views, counts);
    } else {
        kernels::parallel::accumulate(views, counts);
    }

    const auto n = static_cast<std::uint32_t>(frames.size());
    std::vector<float> values(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        // Both operands are exact in double, so the quotient is k/N correctly
        // rounded; the float conversion then rounds once more to nearest.
        values[i] = static_cast<float>(static_cast<double>(counts[i]) / n);
        if (counts[i] > n || std::abs(static_cast<double>(values[i]) * n - counts[i]) > 1e-6 * n) {
            throw std::logic_error("GEI accumulation produced a non-multiple of 1/N");
        }
    }
    return GaitEnergyImage(first.height(), first.width(), std::move(values));
}

GaitEnergyImage compute_gei(const GaitCycle& cycle, Execution exec) {
    return compute_gei(cycle.frames(), exec);
}

BinarySilhouette inject_noise(const BinarySilhouette& frame, const NoiseParams& params, Execution exec) {
    params.validate();
    std::vector<std::uint8_t> out(frame.size());
    const RandomStream stream(params.seed);
    if (exec == Execution::Serial) {
        kernels::serial::flip_noise(frame.pixels(), params.p, stream, out);
    } else {
        kernels::parallel::flip_noise(frame.pixels(), params.p, stream, out);
    }
    return BinarySilhouette(frame.height(), frame.width(), std::move(out));
}

std::vector<BinarySilhouette> inject_noise(std::span<const BinarySilhouette> frames,
                                           const NoiseParams& params, Execution exec) {
    params.validate();
    const RandomStream root(params.seed);
    std::vector<BinarySilhouette> out;
    out.reserve(frames.size());
    for (std::size_t t = 0; t < frames.size(); ++t) {
        out.push_back(inject_noise(frames[t], NoiseParams{params.p, root.split(t).key()}, exec));
    }
    return out;
}

RealGrid expected_noisy_gei(const GaitEnergyImage& clean, double p) {
    NoiseParams{p, 0}.validate();
    RealGrid grid{clean.height(), clean.width(), std::vector<double>(clean.size())};
    const auto v = clean.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        grid.values[i] = (1.0 - 2.0 * p) * static_cast<double>(v[i]) + p;
    }
    return grid;
}

}  // namespace geikit
