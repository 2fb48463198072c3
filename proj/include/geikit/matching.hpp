#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geikit/cycle.hpp"
#include "geikit/gei.hpp"

namespace geikit {

struct GalleryEntry {
    std::string subject_id;
    std::string condition;
    int view_angle = 0;
    GaitEnergyImage gei;

    friend bool operator==(const GalleryEntry&, const GalleryEntry&) = default;
};

// Immutable, cheaply copyable set of enrollment records. Enrolling returns a
// new gallery and leaves the original untouched, so a gallery shared between
// concurrent probes never changes under them.
class Gallery {
public:
    Gallery();
    explicit Gallery(std::vector<GalleryEntry> entries);

    std::span<const GalleryEntry> entries() const noexcept { return *entries_; }
    std::size_t size() const noexcept { return entries_->size(); }
    bool empty() const noexcept { return entries_->empty(); }

    // Throws InvalidArgument for an empty subject id.
    Gallery with_entry(GalleryEntry entry) const;

    friend bool operator==(const Gallery& a, const Gallery& b) { return *a.entries_ == *b.entries_; }

private:
    std::shared_ptr<const std::vector<GalleryEntry>> entries_;
};

struct RankedMatch {
    std::string subject_id;
    double distance = 0.0;
};

struct MatchReport {
    std::vector<RankedMatch> ranked;  // ascending distance, then subject id
    std::optional<std::string> identified;  // empty means rejected
    double threshold_used = 0.0;

    bool accepted() const noexcept { return identified.has_value(); }
};

struct RateReport {
    std::size_t trained = 0;
    std::size_t tested = 0;
    std::size_t recognized = 0;
    double rate = 0.0;  // percent
};

// Euclidean distance divided by sqrt(height*width). Throws DimensionMismatch.
double gei_distance(const GaitEnergyImage& probe, const GaitEnergyImage& entry);

// Both cycles are resampled to L = max(N_probe, N_gallery) frames, frame i
// taking source frame floor((i + 1/2) * N / L); the result is the mean of the
// dimension-normalized Euclidean distances of the aligned pairs.
double template_distance(const GaitCycle& probe, const GaitCycle& gallery,
                         Execution exec = Execution::Parallel);

// Ranks every entry by gei_distance and accepts the nearest when its distance
// is <= threshold. Throws DimensionMismatch when an entry's size differs from
// the probe's.
MatchReport identify(const GaitEnergyImage& probe, const Gallery& gallery, double threshold,
                     Execution exec = Execution::Parallel);

// identify() against the single claimed entry.
MatchReport verify(const GaitEnergyImage& probe, const GalleryEntry& claimed, double threshold);

// rate = recognized / tested * 100. Throws ZeroTested for tested == 0 and
// InvalidArgument when recognized > tested.
RateReport recognition_rate(std::size_t tested, std::size_t recognized, std::size_t trained = 0);

}  // namespace geikit
