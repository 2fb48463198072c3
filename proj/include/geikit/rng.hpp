#pragma once

#include <cstdint>

namespace geikit {

// Counter-based random stream built on the SplitMix64 finalizer. A stream is
// a 64-bit key; `split` derives independent child streams and `uniform(i)`
// gives the i-th draw. Draws depend only on (key, i), so callers may consume
// them in any order or in parallel and still get identical results.
class RandomStream {
public:
    constexpr explicit RandomStream(std::uint64_t key) noexcept : key_(key) {}

    constexpr std::uint64_t key() const noexcept { return key_; }

    constexpr RandomStream split(std::uint64_t index) const noexcept {
        return RandomStream(mix(key_ ^ mix(index + 0x632be59bd9b4e019ULL)));
    }

    constexpr std::uint64_t bits(std::uint64_t counter) const noexcept {
        return mix(key_ + (counter + 1) * 0x9e3779b97f4a7c15ULL);
    }

    // Uniform in [0, 1) with 53 bits of resolution.
    constexpr double uniform(std::uint64_t counter) const noexcept {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
};

}  // namespace geikit
