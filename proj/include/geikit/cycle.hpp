#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "geikit/sequence.hpp"
#include "geikit/silhouette.hpp"

namespace geikit {

// One full gait period: N >= 2 frames of equal size.
class GaitCycle {
public:
    // Throws InvalidArgument for fewer than 2 frames, DimensionMismatch for
    // frames of differing size.
    GaitCycle(std::size_t start_frame, std::vector<BinarySilhouette> frames);

    std::size_t start_frame() const noexcept { return start_frame_; }
    std::size_t length() const noexcept { return frames_.size(); }
    std::span<const BinarySilhouette> frames() const noexcept { return frames_; }
    std::size_t height() const noexcept { return frames_.front().height(); }
    std::size_t width() const noexcept { return frames_.front().width(); }

private:
    std::size_t start_frame_;
    std::vector<BinarySilhouette> frames_;
};

struct PeriodEstimate {
    std::size_t period = 0;
    double confidence = 0.0;  // normalized autocorrelation at `period`, clamped to [0,1]
};

struct PeriodSearch {
    std::size_t min_period = 6;
    std::size_t max_period = 40;
    double min_confidence = 0.3;
};

// Mean-subtracted foreground count of the lower half (rows [h/2, h)) of each
// frame. Frames must share dimensions.
std::vector<double> gait_signal(std::span<const BinarySilhouette> frames);
inline std::vector<double> gait_signal(const SilhouetteSequence& sequence) {
    return gait_signal(sequence.frames);
}

// Biased autocorrelation of the mean-subtracted signal, normalized by lag 0:
// r(k) = sum_{t<n-k} x_t x_{t+k} / sum_t x_t^2, for k in [0, max_lag].
// A zero-variance signal yields all zeros.
std::vector<double> autocorrelation(std::span<const double> signal, std::size_t max_lag);

// The lag in [min_period, max_period] with the highest autocorrelation among
// local maxima (r(k) >= r(k-1) and r(k) >= r(k+1)); ties go to the shorter
// lag. Requires signal.size() >= 2*max_period (SignalTooShort) and throws
// NoPeriodDetected when no peak reaches search.min_confidence.
PeriodEstimate estimate_period(std::span<const double> signal, const PeriodSearch& search);
PeriodEstimate estimate_period(std::span<const double> signal, std::size_t min_period,
                               std::size_t max_period);

// Splits the sequence into floor(n / period) back-to-back cycles. The first
// cycle starts at the lowest gait-signal value within the leading slack
// (the n mod period frames that would otherwise be dropped), earliest on
// ties; whatever is left after the last full cycle is dropped.
std::vector<GaitCycle> segment_cycles(std::span<const BinarySilhouette> frames,
                                      const PeriodEstimate& period);
inline std::vector<GaitCycle> segment_cycles(const SilhouetteSequence& sequence,
                                             const PeriodEstimate& period) {
    return segment_cycles(sequence.frames, period);
}

}  // namespace geikit
