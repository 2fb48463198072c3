#include "geikit/pipeline.hpp"

namespace geikit {

PipelineResult normalized_to_gei(std::span<const BinarySilhouette> frames, const PipelineOptions& options) {
    PeriodEstimate period;
    if (options.fixed_period) {
        period = PeriodEstimate{*options.fixed_period, 1.0};
    } else {
        period = estimate_period(gait_signal(frames), options.search);
    }
    auto cycles = segment_cycles(frames, period);
    const auto& first = cycles.front();
    return PipelineResult{period, first.start_frame(), compute_gei(first)};
}

PipelineResult sequence_to_gei(std::span<const BinarySilhouette> raw_frames, const PipelineOptions& options) {
    const auto normalized = normalize_all(raw_frames, options.normalization);
    return normalized_to_gei(normalized, options);
}

}  // namespace geikit
