#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geikit/sequence.hpp"

namespace geikit {

struct BenchConfig {
    std::size_t persons = 32;
    std::size_t images_per_sequence = 11;
    std::size_t repetitions = 7;
    bool single_threaded = true;

    // Throws InvalidArgument.
    void validate() const;
};

enum class BenchMethod { Template, Gei, Comparison };

std::string_view to_string(BenchMethod method);

struct BenchReport {
    BenchMethod method = BenchMethod::Template;
    std::size_t persons = 0;
    std::size_t images_per_sequence = 0;
    // Median wall time of the timed region in whole nanoseconds. On the
    // comparison record it is t(template) - t(gei) and may be negative.
    std::int64_t wall_time_ns = 0;
    // Gallery images touched per probe pass; on the comparison record the
    // difference template - gei.
    std::int64_t images_processed = 0;
    std::optional<double> time_reduction_percent;

    double wall_time_seconds() const { return static_cast<double>(wall_time_ns) * 1e-9; }
};

struct ComparisonResult {
    BenchReport template_report;
    BenchReport gei_report;
    BenchReport comparison;
    // Keeps the timed distance computations observable.
    double checksum = 0.0;
};

// (t_template - t_gei) / t_template * 100; zero when t_template is zero.
double time_reduction_percent(double t_template, double t_gei);

// Images each method compares per probe pass: persons * images_per_sequence
// frames for template matching, one GEI per person otherwise.
std::size_t images_processed(BenchMethod method, const BenchConfig& config);

// Times probe-vs-gallery matching for both methods. Each of the first
// `persons` distinct subjects in `data` contributes a gallery cycle (its first
// images_per_sequence frames) and a probe cycle (the next images_per_sequence
// frames, or the gallery frames again when the sequence is shorter). Cycles
// and GEIs are built before timing; only the distance computations of every
// probe against every gallery entry are timed. Frames must already share one
// size. Throws InsufficientData or DimensionMismatch.
ComparisonResult run_comparison(const BenchConfig& config, std::span<const SilhouetteSequence> data);

// CSV with header
// method,persons,images_per_sequence,wall_time_s,images_processed,time_reduction_pct
// one row per report in the given order. Throws InvalidArgument for no
// reports (no file is created) and IoError.
void emit_report(std::span<const BenchReport> reports, const std::filesystem::path& path);
std::string format_report(std::span<const BenchReport> reports);

}  // namespace geikit
