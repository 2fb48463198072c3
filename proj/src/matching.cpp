#include "geikit/matching.hpp"

#include <algorithm>
#include <cmath>

#include "geikit/error.hpp"
#include "geikit/kernels.hpp"

namespace geikit {

Gallery::Gallery() : entries_(std::make_shared<const std::vector<GalleryEntry>>()) {}

Gallery::Gallery(std::vector<GalleryEntry> entries) {
    for (const auto& e : entries) {
        if (e.subject_id.empty()) {
            throw Error(ErrorCode::InvalidArgument, "matching", "subject id must not be empty");
        }
    }
    entries_ = std::make_shared<const std::vector<GalleryEntry>>(std::move(entries));
}

Gallery Gallery::with_entry(GalleryEntry entry) const {
    std::vector<GalleryEntry> next(*entries_);
    next.push_back(std::move(entry));
    return Gallery(std::move(next));
}

double gei_distance(const GaitEnergyImage& probe, const GaitEnergyImage& entry) {
    if (!probe.same_shape(entry)) {
        throw Error(ErrorCode::DimensionMismatch, "matching", "GEI sizes differ");
    }
    const double ss = kernels::serial::squared_distance(probe.values(), entry.values());
    return std::sqrt(ss / static_cast<double>(probe.size()));
}

double template_distance(const GaitCycle& probe, const GaitCycle& gallery, Execution exec) {
    if (probe.height() != gallery.height() || probe.width() != gallery.width()) {
        throw Error(ErrorCode::DimensionMismatch, "matching", "cycle frame sizes differ");
    }
    const std::size_t np = probe.length();
    const std::size_t ng = gallery.length();
    const std::size_t len = std::max(np, ng);
    const double pixels = static_cast<double>(probe.height() * probe.width());
    auto source = [len](std::size_t i, std::size_t n) { return (2 * i + 1) * n / (2 * len); };

    double total = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const auto a = probe.frames()[source(i, np)].pixels();
        const auto b = gallery.frames()[source(i, ng)].pixels();
        const std::uint64_t diff = exec == Execution::Serial ? kernels::serial::mismatch_count(a, b)
                                                             : kernels::parallel::mismatch_count(a, b);
        total += std::sqrt(static_cast<double>(diff) / pixels);
    }
    return total / static_cast<double>(len);
}

MatchReport identify(const GaitEnergyImage& probe, const Gallery& gallery, double threshold,
                     Execution exec) {
    if (!(threshold >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "matching", "threshold must be nonnegative");
    }
    const auto entries = gallery.entries();
    std::vector<std::span<const float>> views;
    views.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.gei.same_shape(probe)) {
            throw Error(ErrorCode::DimensionMismatch, "matching",
                        "entry '" + e.subject_id + "' has a different GEI size");
        }
        views.push_back(e.gei.values());
    }
    std::vector<double> sq(entries.size());
    if (exec == Execution::Serial) {
        kernels::serial::squared_distances(probe.values(), views, sq);
    } else {
        kernels::parallel::squared_distances(probe.values(), views, sq);
    }

    MatchReport report;
    report.threshold_used = threshold;
    report.ranked.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        report.ranked.push_back({entries[i].subject_id, std::sqrt(sq[i] / static_cast<double>(probe.size()))});
    }
    std::sort(report.ranked.begin(), report.ranked.end(), [](const RankedMatch& a, const RankedMatch& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.subject_id < b.subject_id;
    });
    if (!report.ranked.empty() && report.ranked.front().distance <= threshold) {
        report.identified = report.ranked.front().subject_id;
    }
    return report;
}

MatchReport verify(const GaitEnergyImage& probe, const GalleryEntry& claimed, double threshold) {
    return identify(probe, Gallery({claimed}), threshold, Execution::Serial);
}

RateReport recognition_rate(std::size_t tested, std::size_t recognized, std::size_t trained) {
    if (tested == 0) {
        throw Error(ErrorCode::ZeroTested, "matching", "no probes were tested");
    }
    if (recognized > tested) {
        throw Error(ErrorCode::InvalidArgument, "matching", "recognized count exceeds tested count");
    }
    return RateReport{trained, tested, recognized,
                      100.0 * static_cast<double>(recognized) / static_cast<double>(tested)};
}

}  // namespace geikit
