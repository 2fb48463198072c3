#include "geikit/error.hpp"

namespace geikit {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptySilhouette: return "EmptySilhouette";
    case ErrorCode::RoiTooWide: return "RoiTooWide";
    case ErrorCode::SignalTooShort: return "SignalTooShort";
    case ErrorCode::NoPeriodDetected: return "NoPeriodDetected";
    case ErrorCode::SequenceTooShort: return "SequenceTooShort";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyCycle: return "EmptyCycle";
    case ErrorCode::ZeroTested: return "ZeroTested";
    case ErrorCode::PathNotFound: return "PathNotFound";
    case ErrorCode::NoFrames: return "NoFrames";
    case ErrorCode::DecodeError: return "DecodeError";
    case ErrorCode::SpecInvalid: return "SpecInvalid";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::InsufficientData: return "InsufficientData";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& stage, const std::string& detail) {
    std::string msg = stage + ": " + std::string(to_string(code));
    if (!detail.empty()) {
        msg += " (" + detail + ")";
    }
    return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string stage, const std::string& detail)
    : std::runtime_error(compose(code, stage, detail)),
      code_(code),
      stage_(std::move(stage)),
      detail_(detail) {}

std::string Error::diagnostic() const {
    return stage_ + ": " + std::string(to_string(code_));
}

FormatError::FormatError(std::uint64_t offset, const std::string& reason)
    : Error(ErrorCode::FormatError, "dataset",
            "offset " + std::to_string(offset) + ": " + reason),
      offset_(offset) {}

}  // namespace geikit
