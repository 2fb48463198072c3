#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geikit {

enum class ErrorCode {
    InvalidArgument,
    // silhouette
    EmptySilhouette,
    RoiTooWide,
    // cycle
    SignalTooShort,
    NoPeriodDetected,
    SequenceTooShort,
    // gei
    DimensionMismatch,
    EmptyCycle,
    // matching
    ZeroTested,
    // dataset
    PathNotFound,
    NoFrames,
    DecodeError,
    SpecInvalid,
    IoError,
    FormatError,
    VersionUnsupported,
    // bench
    InsufficientData,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library. `stage()` names the module that raised
// it ("silhouette", "cycle", ...), so front ends can print "cycle: SequenceTooShort".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string stage, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }
    const std::string& stage() const noexcept { return stage_; }
    const std::string& detail() const noexcept { return detail_; }

    // "<stage>: <CodeName>"
    std::string diagnostic() const;

private:
    ErrorCode code_;
    std::string stage_;
    std::string detail_;
};

// Gallery file parse failure at a byte offset.
class FormatError : public Error {
public:
    FormatError(std::uint64_t offset, const std::string& reason);

    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

}  // namespace geikit
