#include "geikit/kernels.hpp"
#include "kernels_detail.hpp"

namespace geikit::kernels::serial {

void accumulate(std::span<const FrameView> frames, std::span<std::uint32_t> counts) {
    for (auto& c : counts) {
        c = 0;
    }
    for (const auto& frame : frames) {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            counts[i] += frame[i];
        }
    }
}

double squared_distance(std::span<const float> a, std::span<const float> b) {
    return detail::squared_diff_sum(a, b, 0, a.size());
}

std::uint64_t mismatch_count(FrameView a, FrameView b) {
    std::uint64_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        n += a[i] != b[i];
    }
    return n;
}

void squared_distances(std::span<const float> probe, std::span<const std::span<const float>> gallery,
                       std::span<double> out) {
    for (std::size_t g = 0; g < gallery.size(); ++g) {
        out[g] = squared_distance(probe, gallery[g]);
    }
}

void flip_noise(FrameView frame, double p, RandomStream stream, std::span<std::uint8_t> out) {
    for (std::size_t i = 0; i < frame.size(); ++i) {
        const bool flip = stream.uniform(i) < p;
        out[i] = static_cast<std::uint8_t>(frame[i] ^ static_cast<std::uint8_t>(flip));
    }
}

}  // namespace geikit::kernels::serial
