#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "geikit/cycle.hpp"
#include "geikit/gei.hpp"
#include "geikit/silhouette.hpp"

namespace geikit {

struct PipelineOptions {
    NormalizationParams normalization;
    PeriodSearch search;
    // Skips period estimation when set.
    std::optional<std::size_t> fixed_period;
};

struct PipelineResult {
    PeriodEstimate period;
    std::size_t cycle_start = 0;
    GaitEnergyImage gei;
};

// Raw frames -> normalize -> period -> first full cycle -> GEI.
PipelineResult sequence_to_gei(std::span<const BinarySilhouette> raw_frames, const PipelineOptions& options);

// Same, for frames that are already normalized.
PipelineResult normalized_to_gei(std::span<const BinarySilhouette> frames, const PipelineOptions& options);

}  // namespace geikit
