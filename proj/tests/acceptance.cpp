// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "geikit/bench.hpp"
#include "geikit/cycle.hpp"
#include "geikit/dataset.hpp"
#include "geikit/error.hpp"
#include "geikit/gei.hpp"
#include "geikit/matching.hpp"
#include "geikit/pipeline.hpp"
#include "geikit/rng.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

using namespace geikit;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(const char* name, double time_limit_s, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (time_limit_s > 0 && secs >= time_limit_s) {
        out.pass = false;
        out.detail += " [runtime " + std::to_string(secs) + " s exceeds " + std::to_string(time_limit_s) + " s]";
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", name, out.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<BinarySilhouette> normalized_walker(const SynthWalkerSpec& spec) {
    return normalize_all(generate_walker(spec).frames, NormalizationParams{});
}

// ---------------------------------------------------------------------------

Outcome gei_exactness() {
    const RandomStream rng(2024);
    std::size_t pixels = 0;
    double worst_ulps = 0.0;
    std::size_t permutation_mismatch = 0;
    for (std::uint64_t c = 0; c < 200; ++c) {
        const auto s = rng.split(c);
        const std::size_t period = 8 + s.bits(0) % 23;
        auto spec = population_walker(s.bits(1) % 40, s.bits(2), period, period);
        const auto frames = normalized_walker(spec);
        const GaitCycle cycle(0, frames);
        const auto gei = compute_gei(cycle);

        for (std::size_t i = 0; i < gei.size(); ++i) {
            std::uint64_t k = 0;
            for (const auto& f : frames) k += f.pixels()[i];
            worst_ulps = std::max(worst_ulps, std::abs(oracle::ulps_from_rational(gei.values()[i], k, frames.size())));
            ++pixels;
        }

        auto shuffled = frames;
        for (std::size_t i = shuffled.size() - 1; i > 0; --i) {
            std::swap(shuffled[i], shuffled[s.bits(100 + i) % (i + 1)]);
        }
        if (!(compute_gei(shuffled) == gei)) ++permutation_mismatch;
    }
    return {worst_ulps <= 1.0 && permutation_mismatch == 0,
            std::to_string(pixels) + " pixels, worst |error| " + fmt("%.3f", worst_ulps) +
                " ulp (limit 1), permutation mismatches " + std::to_string(permutation_mismatch)};
}

Outcome noise_statistics() {
    const auto frames = normalized_walker(population_walker(3, 11, 20, 20));
    const auto clean = compute_gei(frames);
    const std::size_t n = frames.size();
    const std::size_t m = 500;
    bool pass = true;
    std::string detail;
    for (double p : {0.05, 0.1, 0.2}) {
        std::vector<double> mean(clean.size(), 0.0);
        const RandomStream seeds(static_cast<std::uint64_t>(p * 1000));
        for (std::size_t r = 0; r < m; ++r) {
            const auto noisy = inject_noise(frames, NoiseParams{p, seeds.split(r).key()});
            const auto g = compute_gei(noisy);
            for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += g.values()[i];
        }
        const auto expected = expected_noisy_gei(clean, p);
        const double se = std::sqrt(p * (1 - p) / static_cast<double>(n * m));
        std::size_t within = 0;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            if (std::abs(mean[i] / static_cast<double>(m) - expected.values[i]) <= 3 * se) ++within;
        }
        const double frac = static_cast<double>(within) / static_cast<double>(mean.size());
        pass = pass && frac >= 0.99;
        detail += fmt("p=%.2f: %.4f of pixels within 3 SE; ", p, frac);
    }
    return {pass, detail + "need >= 0.99"};
}

std::vector<SilhouetteSequence> bench_data(std::size_t persons, std::size_t ips) {
    std::vector<SilhouetteSequence> data;
    for (std::size_t i = 0; i < persons; ++i) {
        auto seq = generate_walker(population_walker(i, 5, 20, std::max<std::size_t>(20, 2 * ips)));
        seq.frames = normalize_all(seq.frames, NormalizationParams{});
        data.push_back(std::move(seq));
    }
    return data;
}

Outcome image_accounting() {
    const auto data = bench_data(32, 11);
    const auto r = run_comparison(BenchConfig{32, 11, 3, true}, data);
    return {r.template_report.images_processed == 352 && r.gei_report.images_processed == 32,
            "template " + std::to_string(r.template_report.images_processed) + " (expect 352), gei " +
                std::to_string(r.gei_report.images_processed) + " (expect 32)"};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
    std::ifstream in(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

Outcome speedup_direction() {
    TempDir tmp;
    bool pass = true;
    std::string detail;
    for (std::size_t ips : {4u, 11u}) {
        const auto data = bench_data(16, ips);
        const auto r = run_comparison(BenchConfig{16, ips, 7, true}, data);
        const BenchReport reports[] = {r.template_report, r.gei_report, r.comparison};
        const auto csv = tmp / ("bench_" + std::to_string(ips) + ".csv");
        emit_report(reports, csv);

        const auto rows = read_csv(csv);
        if (rows.size() != 4 || rows[1][0] != "template" || rows[2][0] != "gei" || rows[3][0] != "comparison") {
            return {false, "unexpected CSV layout"};
        }
        const double tm = std::stod(rows[1][3]);
        const double tg = std::stod(rows[2][3]);
        const double emitted = std::stod(rows[3][5]);
        const double recomputed = (tm - tg) / tm * 100.0;
        const bool faster = tg < tm;
        const bool formula = std::abs(recomputed - emitted) < 0.005;
        pass = pass && faster && formula;
        detail += "ips=" + std::to_string(ips) + fmt(": t_m %.6f s, t_g %.6f s, ", tm, tg) +
                  fmt("reduction %.3f%% (recomputed %.3f%%); ", emitted, recomputed);
    }
    return {pass, detail};
}

double truncate2(double v) { return std::floor(v * 100.0 + 1e-9) / 100.0; }

Outcome recognition_rates() {
    const double r1 = recognition_rate(9, 5).rate;
    const double r2 = recognition_rate(23, 13).rate;
    const double r3 = recognition_rate(35, 21).rate;
    const bool formula = truncate2(r1) == 55.55 && std::abs(r1 - 55.55) < 0.01 && truncate2(r2) == 56.52 &&
                       std::abs(r2 - 56.52) < 0.01 && r3 == 60.0;

    const std::size_t walkers = 10;
    PipelineOptions options;
    Gallery gallery;
    std::vector<std::vector<BinarySilhouette>> enrolled;
    for (std::size_t i = 0; i < walkers; ++i) {
        const auto spec = population_walker(i, 1, 20, 100);
        auto frames = normalized_walker(spec);
        gallery = gallery.with_entry({spec.subject_id, spec.condition, spec.view_angle,
                                      normalized_to_gei(frames, options).gei});
        enrolled.push_back(std::move(frames));
    }

    std::size_t self_hits = 0;
    for (std::size_t i = 0; i < walkers; ++i) {
        const auto report = identify(normalized_to_gei(enrolled[i], options).gei, gallery, 0.25);
        if (report.ranked.front().subject_id == gallery.entries()[i].subject_id && report.ranked.front().distance == 0.0)
            ++self_hits;
    }

    std::size_t tested = 0;
    std::size_t hits = 0;
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        for (std::size_t i = 0; i < walkers; ++i) {
            const auto spec = population_walker(i, 100 + trial, 20, 100);
            const auto noisy = inject_noise(normalized_walker(spec), NoiseParams{0.1, 1000 * trial + i});
            const auto report = identify(normalized_to_gei(noisy, options).gei, gallery, 0.25);
            ++tested;
            if (report.ranked.front().subject_id == spec.subject_id) ++hits;
        }
    }
    const auto noisy_rate = recognition_rate(tested, hits, walkers);
    const auto self_rate = recognition_rate(walkers, self_hits, walkers);
    return {formula && noisy_rate.rate >= 90.0 && self_rate.rate == 100.0,
            fmt("rates %.4f / %.4f / %.4f (expect 55.55 / 56.52 / 60.00); ", r1, r2, r3) +
                fmt("rank-1 at p=0.1 %.1f%% (need >= 90), self-match %.1f%% (need 100)", noisy_rate.rate,
                    self_rate.rate)};
}

Outcome period_recovery() {
    const PeriodSearch search{6, 40, 0.3};
    std::string detail;
    bool pass = true;
    for (std::size_t period : {8u, 12u, 20u, 30u}) {
        std::size_t exact = 0;
        std::size_t near = 0;
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto frames = normalized_walker(population_walker(seed % 10, seed, period, 160));
            try {
                if (estimate_period(gait_signal(frames), search).period == period) ++exact;
            } catch (const Error&) {
            }
            try {
                const auto noisy = inject_noise(frames, NoiseParams{0.05, 7919 * seed + period});
                const auto got = static_cast<long>(estimate_period(gait_signal(noisy), search).period);
                if (std::abs(got - static_cast<long>(period)) <= 1) ++near;
            } catch (const Error&) {
            }
        }
        pass = pass && exact == 50 && near == 50;
        detail += "T=" + std::to_string(period) + " exact " + std::to_string(exact) + "/50, noisy +-1 " +
                  std::to_string(near) + "/50; ";
    }
    return {pass, detail};
}

Gallery random_gallery(RandomStream rng) {
    std::vector<GalleryEntry> entries;
    const std::size_t n = rng.bits(0) % 6;
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = rng.split(i);
        const std::size_t h = 1 + s.bits(1) % 40;
        const std::size_t w = 1 + s.bits(2) % 30;
        std::vector<float> v(h * w);
        for (std::size_t k = 0; k < v.size(); ++k) {
            // Mix exact k/N values, arbitrary floats and the endpoints.
            const auto pick = s.bits(1000 + k) % 4;
            v[k] = pick == 0 ? 0.0f : pick == 1 ? 1.0f : pick == 2 ? float(s.bits(5000 + k) % 31) / 30.0f
                                                                    : static_cast<float>(s.uniform(9000 + k));
        }
        std::string id(1 + s.bits(3) % 12, 'a');
        for (auto& ch : id) ch = static_cast<char>('a' + s.bits(ch + 7) % 26);
        entries.push_back({id + std::to_string(i), s.bits(4) % 2 ? "nm-01" : "", static_cast<int>(s.bits(5) % 361) - 180,
                           GaitEnergyImage(h, w, std::move(v))});
    }
    return Gallery(std::move(entries));
}

Outcome gallery_round_trip() {
    TempDir tmp;
    std::size_t identical = 0;
    std::size_t rejected = 0;
    std::size_t corruptions = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto g = random_gallery(RandomStream(s));
        const auto path = tmp / ("g" + std::to_string(s) + ".geig");
        save_gallery(g, path);
        const auto back = load_gallery(path);
        if (back == g && encode_gallery(back) == encode_gallery(g)) ++identical;

        const auto bytes = encode_gallery(g);
        auto bad_magic = bytes;
        bad_magic[s % 4] ^= 0x20;
        std::vector<std::vector<std::uint8_t>> broken{bad_magic};
        for (std::size_t cut : {std::size_t{0}, std::size_t{3}, bytes.size() / 2, bytes.size() - 1}) {
            if (cut < bytes.size()) broken.emplace_back(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>(cut));
        }
        for (std::size_t b = 0; b < broken.size(); ++b) {
            const auto bad_path = tmp / ("bad" + std::to_string(s) + "_" + std::to_string(b));
            std::ofstream(bad_path, std::ios::binary)
                .write(reinterpret_cast<const char*>(broken[b].data()), static_cast<std::streamsize>(broken[b].size()));
            ++corruptions;
            try {
                (void)load_gallery(bad_path);
            } catch (const FormatError& e) {
                if (b != 0 || e.offset() == 0) ++rejected;
            } catch (...) {
            }
        }
    }
    return {identical == 100 && rejected == corruptions,
            std::to_string(identical) + "/100 galleries bit-identical, " + std::to_string(rejected) + "/" +
                std::to_string(corruptions) + " corrupted or truncated files rejected with FormatError"};
}

Outcome metric_properties() {
    const RandomStream rng(99);
    std::size_t violations = 0;
    double worst_slack = -1e300;
    for (std::uint64_t t = 0; t < 1000; ++t) {
        const auto s = rng.split(t);
        const std::size_t h = 1 + s.bits(0) % 64;
        const std::size_t w = 1 + s.bits(1) % 48;
        auto make = [&](std::uint64_t stream) {
            std::vector<float> v(h * w);
            const auto r = s.split(stream);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<float>(r.uniform(i));
            return GaitEnergyImage(h, w, std::move(v));
        };
        const auto a = make(1);
        const auto b = t % 10 == 0 ? a : make(2);
        const auto c = make(3);
        const double ab = gei_distance(a, b), ba = gei_distance(b, a);
        const double bc = gei_distance(b, c), ac = gei_distance(a, c);
        if (ab != ba || ab < 0) ++violations;
        if ((ab == 0.0) != (a == b) || gei_distance(a, a) != 0.0) ++violations;
        worst_slack = std::max(worst_slack, ac - (ab + bc));
        if (ac > ab + bc + 1e-9) ++violations;
    }
    return {violations == 0,
            std::to_string(violations) + " violations over 1000 triples; max d(a,c) - d(a,b) - d(b,c) = " +
                fmt("%.3e", worst_slack) + " (tolerance 1e-9)"};
}

}  // namespace

int main() {
    criterion("GEI exactness and permutation invariance (200 cycles)", 10.0, gei_exactness);
    criterion("Noise model statistics (p = 0.05, 0.1, 0.2; M = 500)", 60.0, noise_statistics);
    criterion("Image accounting (32 persons x 11 images)", 0.0, image_accounting);
    criterion("GEI matching faster than template matching (single-threaded, median of 7)", 0.0, speedup_direction);
    criterion("Recognition rate formula and synthetic identification", 0.0, recognition_rates);
    criterion("Gait period recovery (T = 8, 12, 20, 30; 50 seeds)", 30.0, period_recovery);
    criterion("Gallery round-trip and corruption handling (100 galleries)", 0.0, gallery_round_trip);
    criterion("gei_distance metric properties (1000 triples)", 0.0, metric_properties);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
