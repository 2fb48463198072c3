#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geikit/dataset.hpp"
#include "geikit/pipeline.hpp"

namespace geikit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kData = 2, kProcessing = 3 };

struct CommandOutcome {
    int exit_code = kOk;
    std::optional<std::filesystem::path> report_path;
};

enum class OutputFormat { Text, Csv };

struct SequenceRef {
    std::filesystem::path root;
    std::string subject;
    std::string condition = "nm-01";
    int angle = 90;
    // Used instead of root/subject/condition/angle when set.
    std::optional<std::filesystem::path> frames_dir;
};

struct EnrollArgs {
    SequenceRef sequence;
    std::filesystem::path gallery;
    PipelineOptions pipeline;
};

struct IdentifyArgs {
    SequenceRef probe;
    std::filesystem::path gallery;
    double threshold = 0.25;
    OutputFormat format = OutputFormat::Text;
    PipelineOptions pipeline;
};

struct BenchArgs {
    std::size_t persons = 32;
    std::size_t images_per_sequence = 11;
    std::size_t repetitions = 7;
    std::filesystem::path out_csv = "bench.csv";
    bool single_threaded = false;
    std::uint64_t seed = 1;
    NormalizationParams normalization;
};

struct SynthArgs {
    SynthWalkerSpec spec;
    std::filesystem::path out_dir;
};

struct GeiDumpArgs {
    std::optional<SequenceRef> sequence;
    std::optional<std::filesystem::path> gallery;
    std::string subject;
    std::filesystem::path out;
    PipelineOptions pipeline;
};

CommandOutcome cmd_enroll(const EnrollArgs& args, std::ostream& out, std::ostream& err);
CommandOutcome cmd_identify(const IdentifyArgs& args, std::ostream& out, std::ostream& err);
CommandOutcome cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);
CommandOutcome cmd_synth(const SynthArgs& args, std::ostream& out, std::ostream& err);
CommandOutcome cmd_gei_dump(const GeiDumpArgs& args, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (without the program name) and runs the
// subcommand. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geikit::cli
