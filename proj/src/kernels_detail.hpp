#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace geikit::kernels::detail {

// Sum of squared differences over [lo, hi) using eight interleaved
// accumulators combined in a fixed order.
inline double squared_diff_sum(std::span<const float> a, std::span<const float> b, std::size_t lo,
                               std::size_t hi) {
    constexpr std::size_t kLanes = 8;
    std::array<double, kLanes> acc{};
    std::size_t i = lo;
    for (; i + kLanes <= hi; i += kLanes) {
        for (std::size_t l = 0; l < kLanes; ++l) {
            const double d = static_cast<double>(a[i + l]) - static_cast<double>(b[i + l]);
            acc[l] += d * d;
        }
    }
    for (std::size_t l = 0; i < hi; ++i, ++l) {
        const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
        acc[l] += d * d;
    }
    return ((acc[0] + acc[1]) + (acc[2] + acc[3])) + ((acc[4] + acc[5]) + (acc[6] + acc[7]));
}

}  // namespace geikit::kernels::detail
