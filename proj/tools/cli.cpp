#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "geikit/bench.hpp"
#include "geikit/error.hpp"

namespace geikit::cli {

namespace fs = std::filesystem;

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::PathNotFound:
    case ErrorCode::NoFrames:
    case ErrorCode::DecodeError:
    case ErrorCode::IoError:
    case ErrorCode::FormatError:
    case ErrorCode::VersionUnsupported:
        return kData;
    case ErrorCode::SpecInvalid:
        return kUsage;
    default:
        return kProcessing;
    }
}

CommandOutcome fail(std::ostream& err, const Error& e, int code) {
    err << "error: " << e.what() << "\n";
    return CommandOutcome{code, std::nullopt};
}

CommandOutcome fail(std::ostream& err, const Error& e) { return fail(err, e, exit_code_for(e.code())); }

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::vector<BinarySilhouette> load_ref(const SequenceRef& ref) {
    if (ref.frames_dir) {
        return load_frames(*ref.frames_dir);
    }
    return load_sequence(ref.root, ref.subject, ref.condition, ref.angle).frames;
}

// Data-stage errors (file system, decoding) keep their own exit code; every
// other failure while turning frames into a GEI is a processing error.
PipelineResult gei_for(const SequenceRef& ref, const PipelineOptions& options) {
    const auto frames = load_ref(ref);
    return sequence_to_gei(frames, options);
}

}  // namespace

CommandOutcome cmd_enroll(const EnrollArgs& args, std::ostream& out, std::ostream& err) {
    Gallery gallery;
    std::error_code ec;
    if (fs::exists(args.gallery, ec)) {
        try {
            gallery = load_gallery(args.gallery);
        } catch (const Error& e) {
            return fail(err, e, kData);
        }
    }
    try {
        const auto result = gei_for(args.sequence, args.pipeline);
        const std::string id = args.sequence.subject.empty() ? args.sequence.frames_dir->filename().string()
                                                             : args.sequence.subject;
        gallery = gallery.with_entry(GalleryEntry{id, args.sequence.condition, args.sequence.angle, result.gei});
        save_gallery(gallery, args.gallery);
        out << "enrolled " << id << " period " << result.period.period << " confidence "
            << fixed3(result.period.confidence) << " gallery_size " << gallery.size() << "\n";
    } catch (const Error& e) {
        return fail(err, e);
    }
    return CommandOutcome{kOk, args.gallery};
}

CommandOutcome cmd_identify(const IdentifyArgs& args, std::ostream& out, std::ostream& err) {
    Gallery gallery;
    try {
        gallery = load_gallery(args.gallery);
    } catch (const Error& e) {
        return fail(err, e, kData);
    }
    try {
        const auto probe = gei_for(args.probe, args.pipeline);
        const auto report = identify(probe.gei, gallery, args.threshold);
        if (args.format == OutputFormat::Csv) {
            out << "rank,subject_id,distance\n";
            for (std::size_t i = 0; i < report.ranked.size(); ++i) {
                out << i + 1 << "," << report.ranked[i].subject_id << "," << fixed3(report.ranked[i].distance) << "\n";
            }
            out << "decision," << (report.accepted() ? "IDENTIFIED," + *report.identified : "REJECTED,") << "\n";
        } else {
            for (std::size_t i = 0; i < report.ranked.size(); ++i) {
                out << i + 1 << " " << report.ranked[i].subject_id << " " << fixed3(report.ranked[i].distance) << "\n";
            }
            out << (report.accepted() ? "IDENTIFIED " + *report.identified : "REJECTED") << "\n";
        }
    } catch (const Error& e) {
        return fail(err, e);
    }
    return CommandOutcome{kOk, std::nullopt};
}

CommandOutcome cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
    const BenchConfig config{args.persons, args.images_per_sequence, args.repetitions, args.single_threaded};
    try {
        config.validate();
    } catch (const Error& e) {
        return fail(err, e, kUsage);
    }
    try {
        const std::size_t frames = std::max<std::size_t>(20, 2 * args.images_per_sequence);
        std::vector<SilhouetteSequence> data;
        data.reserve(args.persons);
        for (std::size_t i = 0; i < args.persons; ++i) {
            auto seq = generate_walker(population_walker(i, args.seed, 20, frames));
            seq.frames = normalize_all(seq.frames, args.normalization);
            data.push_back(std::move(seq));
        }
        const auto result = run_comparison(config, data);
        const BenchReport reports[] = {result.template_report, result.gei_report, result.comparison};
        emit_report(reports, args.out_csv);
        out << "template " << fixed3(result.template_report.wall_time_seconds()) << " s, "
            << result.template_report.images_processed << " images\n";
        out << "gei " << fixed3(result.gei_report.wall_time_seconds()) << " s, " << result.gei_report.images_processed
            << " images\n";
        out << "time reduction " << fixed3(*result.comparison.time_reduction_percent) << " %\n";
    } catch (const Error& e) {
        return fail(err, e);
    }
    return CommandOutcome{kOk, args.out_csv};
}

CommandOutcome cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err) {
    try {
        args.spec.validate();
    } catch (const Error& e) {
        return fail(err, e, kUsage);
    }
    try {
        const auto seq = generate_walker(args.spec);
        const auto dir = write_sequence(args.out_dir, seq);
        out << "wrote " << seq.frames.size() << " frames to " << dir.string() << "\n";
        return CommandOutcome{kOk, dir};
    } catch (const Error& e) {
        return fail(err, e, kData);
    }
}

CommandOutcome cmd_gei_dump(const GeiDumpArgs& args, std::ostream& out, std::ostream& err) {
    try {
        std::optional<GaitEnergyImage> gei;
        if (args.gallery) {
            Gallery gallery;
            try {
                gallery = load_gallery(*args.gallery);
            } catch (const Error& e) {
                return fail(err, e, kData);
            }
            for (const auto& e : gallery.entries()) {
                if (e.subject_id == args.subject) {
                    gei = e.gei;
                    break;
                }
            }
            if (!gei) {
                err << "error: subject '" << args.subject << "' is not enrolled\n";
                return CommandOutcome{kData, std::nullopt};
            }
        } else {
            gei = gei_for(*args.sequence, args.pipeline).gei;
        }
        GrayImage img{gei->height(), gei->width(), std::vector<std::uint8_t>(gei->size())};
        for (std::size_t i = 0; i < gei->size(); ++i) {
            img.pixels[i] = static_cast<std::uint8_t>(std::lround(gei->values()[i] * 255.0f));
        }
        write_png(args.out, img);
        out << "wrote " << gei->height() << "x" << gei->width() << " GEI to " << args.out.string() << "\n";
    } catch (const Error& e) {
        return fail(err, e);
    }
    return CommandOutcome{kOk, args.out};
}

namespace {

std::pair<std::size_t, std::size_t> parse_size(const std::string& text) {
    std::size_t h = 0;
    std::size_t w = 0;
    char x = 0;
    std::istringstream in(text);
    if (!(in >> h >> x >> w) || (x != 'x' && x != 'X') || !in.eof()) {
        throw CLI::ValidationError("size", "expected HxW, got '" + text + "'");
    }
    return {h, w};
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("GEIKIT_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

struct CommonFlags {
    std::string root;
    std::string subject;
    std::string condition = "nm-01";
    int angle = 90;
    std::string frames_dir;
    std::string gallery;
    std::string target_size = "128x88";
    std::string centering = "top-half";
    std::size_t min_period = 6;
    std::size_t max_period = 40;
    std::size_t period = 0;
    double min_confidence = 0.3;

    void add_sequence(CLI::App* app) {
        app->add_option("--root", root, "Dataset root (root/subject/condition/angle/)");
        app->add_option("--subject", subject, "Subject id");
        app->add_option("--condition", condition, "Condition tag")->capture_default_str();
        app->add_option("--angle", angle, "View angle in degrees")->capture_default_str();
        app->add_option("--frames-dir", frames_dir, "Directory of frames, instead of --root layout");
    }

    void add_pipeline(CLI::App* app) {
        app->add_option("--target-size", target_size, "Normalized frame size HxW")->capture_default_str();
        app->add_option("--centering", centering, "top-half or full")
            ->check(CLI::IsMember({"top-half", "full"}))
            ->capture_default_str();
        app->add_option("--min-period", min_period, "Shortest gait period searched")->capture_default_str();
        app->add_option("--max-period", max_period, "Longest gait period searched")->capture_default_str();
        app->add_option("--period", period, "Known gait period; skips estimation");
        app->add_option("--min-confidence", min_confidence, "Autocorrelation floor for a period")
            ->capture_default_str();
    }

    SequenceRef sequence() const {
        SequenceRef ref{root, subject, condition, angle, std::nullopt};
        if (!frames_dir.empty()) {
            ref.frames_dir = frames_dir;
        } else if (root.empty() || subject.empty()) {
            throw CLI::ValidationError("--root/--subject", "a sequence needs --root and --subject, or --frames-dir");
        }
        return ref;
    }

    PipelineOptions pipeline() const {
        PipelineOptions opts;
        const auto [h, w] = parse_size(target_size);
        opts.normalization.target_height = h;
        opts.normalization.target_width = w;
        opts.normalization.centering = centering == "full" ? Centering::FullCentroid : Centering::TopHalfCentroid;
        opts.search = PeriodSearch{min_period, max_period, min_confidence};
        if (period > 0) {
            opts.fixed_period = period;
        }
        return opts;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gait Energy Image toolkit", "geikit"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::uint64_t seed = default_seed();
    double threshold = 0.25;
    std::string format = "text";
    std::string out_path;
    bool single_threaded = false;
    BenchArgs bench;
    SynthWalkerSpec spec;
    std::string canvas = "160x120";

    auto* enroll = app.add_subcommand("enroll", "Enroll a sequence's GEI into a gallery");
    flags.add_sequence(enroll);
    flags.add_pipeline(enroll);
    enroll->add_option("--gallery", flags.gallery, "Gallery file")->required();

    auto* ident = app.add_subcommand("identify", "Match a probe sequence against a gallery");
    flags.add_sequence(ident);
    flags.add_pipeline(ident);
    ident->add_option("--gallery", flags.gallery, "Gallery file")->required();
    ident->add_option("--threshold", threshold, "Acceptance distance")->capture_default_str();
    ident->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

    auto* bench_cmd = app.add_subcommand("bench", "Time template vs GEI matching on synthetic walkers");
    bench_cmd->add_option("--persons", bench.persons)->capture_default_str();
    bench_cmd->add_option("--images-per-sequence", bench.images_per_sequence)->capture_default_str();
    bench_cmd->add_option("--repetitions", bench.repetitions)->capture_default_str();
    bench_cmd->add_option("--out", out_path, "CSV report path")->default_str("bench.csv");
    bench_cmd->add_option("--target-size", flags.target_size)->capture_default_str();
    bench_cmd->add_option("--seed", seed);
    bench_cmd->add_flag("--single-threaded", single_threaded, "Time on one thread");

    auto* synth = app.add_subcommand("synth", "Write a synthetic walker in dataset layout");
    synth->add_option("--root,--out", out_path, "Output dataset root")->required();
    synth->add_option("--subject", spec.subject_id)->capture_default_str();
    synth->add_option("--condition", spec.condition)->capture_default_str();
    synth->add_option("--angle", spec.view_angle)->capture_default_str();
    synth->add_option("--stride-period", spec.stride_period)->capture_default_str();
    spec.frame_count = 100;
    synth->add_option("--frames", spec.frame_count)->capture_default_str();
    synth->add_option("--torso-width", spec.torso_width)->capture_default_str();
    synth->add_option("--leg-length", spec.leg_length)->capture_default_str();
    synth->add_option("--arm-swing", spec.arm_swing_amplitude)->capture_default_str();
    synth->add_option("--canvas", canvas, "Canvas size HxW")->capture_default_str();
    synth->add_option("--seed", seed);

    auto* dump = app.add_subcommand("gei-dump", "Write a GEI as a grayscale PNG");
    flags.add_sequence(dump);
    flags.add_pipeline(dump);
    dump->add_option("--gallery", flags.gallery, "Take the GEI of --subject from this gallery");
    dump->add_option("--out", out_path, "Output PNG")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (enroll->parsed()) {
            return cmd_enroll(EnrollArgs{flags.sequence(), flags.gallery, flags.pipeline()}, out, err).exit_code;
        }
        if (ident->parsed()) {
            return cmd_identify(IdentifyArgs{flags.sequence(), flags.gallery, threshold,
                                             format == "csv" ? OutputFormat::Csv : OutputFormat::Text,
                                             flags.pipeline()},
                                out, err)
                .exit_code;
        }
        if (bench_cmd->parsed()) {
            bench.out_csv = out_path.empty() ? "bench.csv" : out_path;
            bench.single_threaded = single_threaded;
            bench.seed = seed;
            bench.normalization = flags.pipeline().normalization;
            return cmd_bench(bench, out, err).exit_code;
        }
        if (synth->parsed()) {
            const auto [h, w] = parse_size(canvas);
            spec.canvas_height = h;
            spec.canvas_width = w;
            spec.seed = seed;
            return cmd_synth(SynthArgs{spec, out_path}, out, err).exit_code;
        }
        if (dump->parsed()) {
            GeiDumpArgs d;
            if (flags.gallery.empty()) {
                d.sequence = flags.sequence();
            } else {
                d.gallery = fs::path(flags.gallery);
                d.subject = flags.subject;
            }
            d.out = out_path;
            d.pipeline = flags.pipeline();
            return cmd_gei_dump(d, out, err).exit_code;
        }
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace geikit::cli
