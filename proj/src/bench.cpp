#include "geikit/bench.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <set>

#include "geikit/dataset.hpp"
#include "geikit/error.hpp"
#include "geikit/gei.hpp"
#include "geikit/matching.hpp"

namespace geikit {

void BenchConfig::validate() const {
    if (persons < 1) {
        throw Error(ErrorCode::InvalidArgument, "bench", "persons must be at least 1");
    }
    if (images_per_sequence < 2) {
        throw Error(ErrorCode::InvalidArgument, "bench", "images_per_sequence must be at least 2");
    }
    if (repetitions < 3) {
        throw Error(ErrorCode::InvalidArgument, "bench", "repetitions must be at least 3");
    }
}

std::string_view to_string(BenchMethod method) {
    switch (method) {
    case BenchMethod::Template: return "template";
    case BenchMethod::Gei: return "gei";
    case BenchMethod::Comparison: return "comparison";
    }
    return "unknown";
}

double time_reduction_percent(double t_template, double t_gei) {
    if (t_template == 0.0) {
        return 0.0;
    }
    return (t_template - t_gei) / t_template * 100.0;
}

std::size_t images_processed(BenchMethod method, const BenchConfig& config) {
    switch (method) {
    case BenchMethod::Template: return config.persons * config.images_per_sequence;
    case BenchMethod::Gei: return config.persons;
    case BenchMethod::Comparison: break;
    }
    return config.persons * config.images_per_sequence - config.persons;
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t median_ns(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    return n % 2 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2;
}

template <typename Fn>
std::int64_t time_ns(Fn&& fn) {
    const auto start = Clock::now();
    fn();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

}  // namespace

ComparisonResult run_comparison(const BenchConfig& config, std::span<const SilhouetteSequence> data) {
    config.validate();
    const std::size_t ips = config.images_per_sequence;

    std::vector<const SilhouetteSequence*> chosen;
    std::set<std::string> seen;
    for (const auto& seq : data) {
        if (chosen.size() == config.persons) {
            break;
        }
        if (seen.insert(seq.subject_id).second) {
            if (seq.frames.size() < ips) {
                throw Error(ErrorCode::InsufficientData, "bench",
                            "subject '" + seq.subject_id + "' has " + std::to_string(seq.frames.size()) +
                                " frames, need " + std::to_string(ips));
            }
            chosen.push_back(&seq);
        }
    }
    if (chosen.size() < config.persons) {
        throw Error(ErrorCode::InsufficientData, "bench",
                    std::to_string(chosen.size()) + " distinct subjects, need " + std::to_string(config.persons));
    }

    std::vector<GaitCycle> gallery_cycles;
    std::vector<GaitCycle> probe_cycles;
    std::vector<GaitEnergyImage> gallery_geis;
    std::vector<GaitEnergyImage> probe_geis;
    for (const auto* seq : chosen) {
        const auto& f = seq->frames;
        if (!f.front().same_shape(chosen.front()->frames.front())) {
            throw Error(ErrorCode::DimensionMismatch, "bench", "sequences must share one frame size");
        }
        gallery_cycles.emplace_back(0, std::vector<BinarySilhouette>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(ips)));
        const std::size_t probe_start = f.size() >= 2 * ips ? ips : 0;
        probe_cycles.emplace_back(probe_start,
                                  std::vector<BinarySilhouette>(f.begin() + static_cast<std::ptrdiff_t>(probe_start),
                                                                f.begin() + static_cast<std::ptrdiff_t>(probe_start + ips)));
        gallery_geis.push_back(compute_gei(gallery_cycles.back(), Execution::Serial));
        probe_geis.push_back(compute_gei(probe_cycles.back(), Execution::Serial));
    }

    const auto persons = static_cast<std::ptrdiff_t>(config.persons);
    std::vector<double> sums(config.persons, 0.0);
    const int threads = config.single_threaded ? 1 : omp_get_max_threads();

    auto run_template = [&] {
#pragma omp parallel for num_threads(threads) schedule(static)
        for (std::ptrdiff_t p = 0; p < persons; ++p) {
            double s = 0.0;
            for (const auto& g : gallery_cycles) {
                s += template_distance(probe_cycles[static_cast<std::size_t>(p)], g, Execution::Serial);
            }
            sums[static_cast<std::size_t>(p)] += s;
        }
    };
    auto run_gei = [&] {
#pragma omp parallel for num_threads(threads) schedule(static)
        for (std::ptrdiff_t p = 0; p < persons; ++p) {
            double s = 0.0;
            for (const auto& g : gallery_geis) {
                s += gei_distance(probe_geis[static_cast<std::size_t>(p)], g);
            }
            sums[static_cast<std::size_t>(p)] += s;
        }
    };

    std::vector<std::int64_t> template_ns;
    std::vector<std::int64_t> gei_ns;
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
        template_ns.push_back(time_ns(run_template));
        gei_ns.push_back(time_ns(run_gei));
    }

    ComparisonResult result;
    for (double s : sums) {
        result.checksum += s;
    }
    auto base = [&](BenchMethod m) {
        BenchReport r;
        r.method = m;
        r.persons = config.persons;
        r.images_per_sequence = ips;
        r.images_processed = static_cast<std::int64_t>(images_processed(m, config));
        return r;
    };
    result.template_report = base(BenchMethod::Template);
    result.template_report.wall_time_ns = median_ns(template_ns);
    result.gei_report = base(BenchMethod::Gei);
    result.gei_report.wall_time_ns = median_ns(gei_ns);
    result.comparison = base(BenchMethod::Comparison);
    result.comparison.wall_time_ns = result.template_report.wall_time_ns - result.gei_report.wall_time_ns;
    result.comparison.time_reduction_percent =
        time_reduction_percent(static_cast<double>(result.template_report.wall_time_ns),
                               static_cast<double>(result.gei_report.wall_time_ns));
    return result;
}

namespace {

// Exact decimal rendering of a nanosecond count as seconds.
std::string seconds_from_ns(std::int64_t ns) {
    const bool negative = ns < 0;
    const std::uint64_t mag = negative ? static_cast<std::uint64_t>(-(ns + 1)) + 1 : static_cast<std::uint64_t>(ns);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%" PRIu64 ".%09" PRIu64, negative ? "-" : "", mag / 1000000000u,
                  mag % 1000000000u);
    return buf;
}

}  // namespace

std::string format_report(std::span<const BenchReport> reports) {
    std::string out = "method,persons,images_per_sequence,wall_time_s,images_processed,time_reduction_pct\n";
    for (const auto& r : reports) {
        char pct[32] = "";
        if (r.time_reduction_percent) {
            std::snprintf(pct, sizeof pct, "%.3f", *r.time_reduction_percent);
        }
        out += std::string(to_string(r.method)) + "," + std::to_string(r.persons) + "," +
               std::to_string(r.images_per_sequence) + "," + seconds_from_ns(r.wall_time_ns) + "," +
               std::to_string(r.images_processed) + "," + pct + "\n";
    }
    return out;
}

void emit_report(std::span<const BenchReport> reports, const std::filesystem::path& path) {
    if (reports.empty()) {
        throw Error(ErrorCode::InvalidArgument, "bench", "no reports to write");
    }
    const std::string text = format_report(reports);
    write_file_atomic(path, {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()});
}

}  // namespace geikit
