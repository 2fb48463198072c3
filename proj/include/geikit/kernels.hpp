#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "geikit/rng.hpp"

// Pixel kernels behind the GEI, noise and matching operations. `serial` is the
// plain reference; `parallel` is the OpenMP version the library uses by
// default. Integer kernels and noise injection agree bit-for-bit between the
// two; floating-point reductions agree to rounding.
namespace geikit::kernels {

using FrameView = std::span<const std::uint8_t>;

namespace serial {

// counts[i] = number of frames with pixel i set. All frames must have
// counts.size() pixels.
void accumulate(std::span<const FrameView> frames, std::span<std::uint32_t> counts);

// Sum of squared differences.
double squared_distance(std::span<const float> a, std::span<const float> b);
std::uint64_t mismatch_count(FrameView a, FrameView b);

// out[i] = squared_distance(probe, gallery[i])
void squared_distances(std::span<const float> probe, std::span<const std::span<const float>> gallery,
                       std::span<double> out);

// out[i] = frame[i] flipped with probability p, using draw i of `stream`.
void flip_noise(FrameView frame, double p, RandomStream stream, std::span<std::uint8_t> out);

}  // namespace serial

namespace parallel {

void accumulate(std::span<const FrameView> frames, std::span<std::uint32_t> counts);
double squared_distance(std::span<const float> a, std::span<const float> b);
std::uint64_t mismatch_count(FrameView a, FrameView b);
void squared_distances(std::span<const float> probe, std::span<const std::span<const float>> gallery,
                       std::span<double> out);
void flip_noise(FrameView frame, double p, RandomStream stream, std::span<std::uint8_t> out);

}  // namespace parallel

}  // namespace geikit::kernels
