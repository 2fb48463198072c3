#include "geikit/cycle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "geikit/error.hpp"

namespace geikit {

GaitCycle::GaitCycle(std::size_t start_frame, std::vector<BinarySilhouette> frames)
    : start_frame_(start_frame), frames_(std::move(frames)) {
    if (frames_.size() < 2) {
        throw Error(ErrorCode::InvalidArgument, "cycle", "a gait cycle needs at least 2 frames");
    }
    for (const auto& f : frames_) {
        if (!f.same_shape(frames_.front())) {
            throw Error(ErrorCode::DimensionMismatch, "cycle", "cycle frames differ in size");
        }
    }
}

std::vector<double> gait_signal(std::span<const BinarySilhouette> frames) {
    std::vector<double> signal;
    signal.reserve(frames.size());
    for (const auto& f : frames) {
        if (!f.same_shape(frames.front())) {
            throw Error(ErrorCode::DimensionMismatch, "cycle", "sequence frames differ in size");
        }
        const auto px = f.pixels();
        const auto lower = px.subspan((f.height() / 2) * f.width());
        signal.push_back(static_cast<double>(std::count(lower.begin(), lower.end(), std::uint8_t{1})));
    }
    if (signal.empty()) {
        return signal;
    }
    const double mean = std::accumulate(signal.begin(), signal.end(), 0.0) / static_cast<double>(signal.size());
    for (auto& v : signal) {
        v -= mean;
    }
    return signal;
}

std::vector<double> autocorrelation(std::span<const double> signal, std::size_t max_lag) {
    const std::size_t n = signal.size();
    std::vector<double> r(max_lag + 1, 0.0);
    if (n == 0) {
        return r;
    }
    const double mean = std::accumulate(signal.begin(), signal.end(), 0.0) / static_cast<double>(n);
    std::vector<double> x(n);
    std::transform(signal.begin(), signal.end(), x.begin(), [mean](double v) { return v - mean; });

    double energy = 0.0;
    for (double v : x) {
        energy += v * v;
    }
    // Below this the signal is constant up to rounding of the mean.
    if (energy <= 1e-12 * static_cast<double>(n)) {
        return r;
    }
    for (std::size_t k = 0; k <= max_lag && k < n; ++k) {
        double s = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) {
            s += x[t] * x[t + k];
        }
        r[k] = s / energy;
    }
    return r;
}

PeriodEstimate estimate_period(std::span<const double> signal, const PeriodSearch& search) {
    if (search.min_period < 2 || search.max_period <= search.min_period) {
        throw Error(ErrorCode::InvalidArgument, "cycle",
                    "period range must satisfy 2 <= min < max");
    }
    if (signal.size() < 2 * search.max_period) {
        throw Error(ErrorCode::SignalTooShort, "cycle",
                    std::to_string(signal.size()) + " samples, need " +
                        std::to_string(2 * search.max_period));
    }
    const auto r = autocorrelation(signal, search.max_period + 1);

    bool found = false;
    PeriodEstimate best;
    double best_r = 0.0;
    for (std::size_t k = search.min_period; k <= search.max_period; ++k) {
        const bool peak = r[k] >= r[k - 1] && r[k] >= r[k + 1];
        if (peak && (!found || r[k] > best_r)) {
            found = true;
            best_r = r[k];
            best.period = k;
        }
    }
    if (!found || best_r < search.min_confidence) {
        throw Error(ErrorCode::NoPeriodDetected, "cycle",
                    found ? "best peak " + std::to_string(best_r) : "no autocorrelation peak");
    }
    best.confidence = std::clamp(best_r, 0.0, 1.0);
    return best;
}

PeriodEstimate estimate_period(std::span<const double> signal, std::size_t min_period,
                               std::size_t max_period) {
    return estimate_period(signal, PeriodSearch{min_period, max_period, 0.3});
}

std::vector<GaitCycle> segment_cycles(std::span<const BinarySilhouette> frames,
                                      const PeriodEstimate& period) {
    if (period.period < 2) {
        throw Error(ErrorCode::InvalidArgument, "cycle", "period must be at least 2");
    }
    const std::size_t n = frames.size();
    const std::size_t count = n / period.period;
    if (count == 0) {
        throw Error(ErrorCode::SequenceTooShort, "cycle",
                    std::to_string(n) + " frames, period " + std::to_string(period.period));
    }
    const std::size_t slack = n - count * period.period;
    const auto signal = gait_signal(frames);
    const auto first = signal.begin();
    const std::size_t start = static_cast<std::size_t>(
        std::min_element(first, first + static_cast<std::ptrdiff_t>(slack) + 1) - first);

    std::vector<GaitCycle> cycles;
    cycles.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        const std::size_t begin = start + c * period.period;
        cycles.emplace_back(begin, std::vector<BinarySilhouette>(frames.begin() + static_cast<std::ptrdiff_t>(begin),
                                                                 frames.begin() + static_cast<std::ptrdiff_t>(begin + period.period)));
    }
    return cycles;
}

}  // namespace geikit
