#include "geikit/dataset.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "geikit/error.hpp"

namespace fs = std::filesystem;

namespace geikit {

fs::path sequence_directory(const fs::path& root, const std::string& subject, const std::string& condition,
                            int angle) {
    char padded[16];
    std::snprintf(padded, sizeof padded, "%03d", angle);
    const fs::path base = root / subject / condition;
    std::error_code ec;
    if (!fs::is_directory(base / padded, ec) && fs::is_directory(base / std::to_string(angle), ec)) {
        return base / std::to_string(angle);
    }
    return base / padded;
}

BinarySilhouette binarize(const GrayImage& image) {
    const bool already_binary =
        std::all_of(image.pixels.begin(), image.pixels.end(), [](std::uint8_t v) { return v <= 1; });
    std::vector<std::uint8_t> px(image.pixels.size());
    std::transform(image.pixels.begin(), image.pixels.end(), px.begin(), [already_binary](std::uint8_t v) {
        return static_cast<std::uint8_t>(already_binary ? v != 0 : v >= 128);
    });
    return BinarySilhouette(image.height, image.width, std::move(px));
}

std::vector<BinarySilhouette> load_frames(const fs::path& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw Error(ErrorCode::PathNotFound, "dataset", dir.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file() && is_supported_image(entry.path())) {
            files.push_back(entry.path());
        }
    }
    if (ec) {
        throw Error(ErrorCode::IoError, "dataset", dir.string() + ": " + ec.message());
    }
    if (files.empty()) {
        throw Error(ErrorCode::NoFrames, "dataset", dir.string());
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
    });

    std::vector<BinarySilhouette> frames;
    frames.reserve(files.size());
    for (const auto& f : files) {
        frames.push_back(binarize(read_image(f)));
    }
    return frames;
}

SilhouetteSequence load_sequence(const fs::path& root, const std::string& subject, const std::string& condition,
                                 int angle) {
    SilhouetteSequence seq;
    seq.subject_id = subject;
    seq.condition = condition;
    seq.view_angle = angle;
    seq.frames = load_frames(sequence_directory(root, subject, condition, angle));
    return seq;
}

fs::path write_sequence(const fs::path& root, const SilhouetteSequence& sequence) {
    char padded[16];
    std::snprintf(padded, sizeof padded, "%03d", sequence.view_angle);
    const fs::path dir = root / sequence.subject_id / sequence.condition / padded;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::IoError, "dataset", dir.string() + ": " + ec.message());
    }
    for (std::size_t t = 0; t < sequence.frames.size(); ++t) {
        const auto& f = sequence.frames[t];
        GrayImage img{f.height(), f.width(), std::vector<std::uint8_t>(f.size())};
        std::transform(f.pixels().begin(), f.pixels().end(), img.pixels.begin(),
                       [](std::uint8_t v) { return static_cast<std::uint8_t>(v ? 255 : 0); });
        char name[32];
        std::snprintf(name, sizeof name, "frame_%03zu.png", t);
        write_png(dir / name, img);
    }
    return dir;
}

void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> data) {
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoError, "dataset", "cannot write " + tmp.string());
        }
        out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw Error(ErrorCode::IoError, "dataset", "short write to " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw Error(ErrorCode::IoError, "dataset", "cannot replace " + path.string() + ": " + ec.message());
    }
}

}  // namespace geikit
