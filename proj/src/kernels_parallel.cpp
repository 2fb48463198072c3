#include <omp.h>

#include <algorithm>
#include <vector>

#include "geikit/kernels.hpp"
#include "kernels_detail.hpp"

namespace geikit::kernels::parallel {

namespace {

// Reductions are summed in fixed-size blocks and the block partials combined
// in order, so results do not depend on the thread count.
constexpr std::size_t kBlock = 4096;

std::ptrdiff_t as_index(std::size_t n) { return static_cast<std::ptrdiff_t>(n); }

}  // namespace

void accumulate(std::span<const FrameView> frames, std::span<std::uint32_t> counts) {
    const std::ptrdiff_t n = as_index(counts.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        std::uint32_t c = 0;
        for (const auto& frame : frames) {
            c += frame[static_cast<std::size_t>(i)];
        }
        counts[static_cast<std::size_t>(i)] = c;
    }
}

double squared_distance(std::span<const float> a, std::span<const float> b) {
    const std::size_t blocks = (a.size() + kBlock - 1) / kBlock;
    std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t blk = 0; blk < as_index(blocks); ++blk) {
        const std::size_t lo = static_cast<std::size_t>(blk) * kBlock;
        const std::size_t hi = std::min(a.size(), lo + kBlock);
        partial[static_cast<std::size_t>(blk)] = detail::squared_diff_sum(a, b, lo, hi);
    }
    double total = 0.0;
    for (double s : partial) {
        total += s;
    }
    return total;
}

std::uint64_t mismatch_count(FrameView a, FrameView b) {
    std::uint64_t n = 0;
    const std::ptrdiff_t size = as_index(a.size());
#pragma omp parallel for reduction(+ : n) schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
        n += a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)];
    }
    return n;
}

void squared_distances(std::span<const float> probe, std::span<const std::span<const float>> gallery,
                       std::span<double> out) {
    // One entry per task; each entry is summed serially so ranking is
    // reproducible.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t g = 0; g < as_index(gallery.size()); ++g) {
        out[static_cast<std::size_t>(g)] =
            serial::squared_distance(probe, gallery[static_cast<std::size_t>(g)]);
    }
}

void flip_noise(FrameView frame, double p, RandomStream stream, std::span<std::uint8_t> out) {
    const std::ptrdiff_t n = as_index(frame.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const bool flip = stream.uniform(idx) < p;
        out[idx] = static_cast<std::uint8_t>(frame[idx] ^ static_cast<std::uint8_t>(flip));
    }
}

}  // namespace geikit::kernels::parallel
