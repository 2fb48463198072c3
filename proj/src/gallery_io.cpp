#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>
#include <system_error>

#include "geikit/dataset.hpp"
#include "geikit/error.hpp"

namespace fs = std::filesystem;

namespace geikit {

namespace {

constexpr std::uint8_t kMagic[4] = {'G', 'E', 'I', 'G'};

class Writer {
public:
    void u16(std::uint16_t v) {
        buf_.push_back(static_cast<std::uint8_t>(v));
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    }
    void u32(std::uint32_t v) {
        for (int s = 0; s < 32; s += 8) {
            buf_.push_back(static_cast<std::uint8_t>(v >> s));
        }
    }
    void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
    void bytes(std::span<const std::uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    void string16(const std::string& s, const char* what) {
        if (s.size() > std::numeric_limits<std::uint16_t>::max()) {
            throw Error(ErrorCode::InvalidArgument, "dataset", std::string(what) + " longer than 65535 bytes");
        }
        u16(static_cast<std::uint16_t>(s.size()));
        bytes({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
    }

    std::vector<std::uint8_t> take() { return std::move(buf_); }

private:
    std::vector<std::uint8_t> buf_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint64_t offset() const { return pos_; }
    bool at_end() const { return pos_ == data_.size(); }

    std::span<const std::uint8_t> take(std::size_t n, const char* what) {
        if (data_.size() - pos_ < n) {
            throw FormatError(pos_, std::string("truncated ") + what);
        }
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::uint16_t u16(const char* what) {
        auto b = take(2, what);
        return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
    }
    std::uint32_t u32(const char* what) {
        auto b = take(4, what);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
    }
    std::string string16(const char* what) {
        const std::uint16_t len = u16(what);
        auto b = take(len, what);
        return std::string(reinterpret_cast<const char*>(b.data()), b.size());
    }

private:
    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

std::uint16_t checked_u16(std::size_t v, const char* what) {
    if (v > std::numeric_limits<std::uint16_t>::max()) {
        throw Error(ErrorCode::InvalidArgument, "dataset", std::string(what) + " exceeds 65535");
    }
    return static_cast<std::uint16_t>(v);
}

}  // namespace

std::vector<std::uint8_t> encode_gallery(const Gallery& gallery) {
    Writer w;
    w.bytes(kMagic);
    w.u16(kGalleryVersion);
    w.u32(static_cast<std::uint32_t>(gallery.size()));
    for (const auto& e : gallery.entries()) {
        w.string16(e.subject_id, "subject id");
        w.string16(e.condition, "condition");
        if (e.view_angle < std::numeric_limits<std::int16_t>::min() ||
            e.view_angle > std::numeric_limits<std::int16_t>::max()) {
            throw Error(ErrorCode::InvalidArgument, "dataset", "view angle does not fit in 16 bits");
        }
        w.u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(e.view_angle)));
        w.u16(checked_u16(e.gei.height(), "GEI height"));
        w.u16(checked_u16(e.gei.width(), "GEI width"));
        for (float v : e.gei.values()) {
            w.f32(v);
        }
    }
    return w.take();
}

Gallery decode_gallery(std::span<const std::uint8_t> bytes) {
    Reader r(bytes);
    const auto magic = r.take(4, "magic");
    if (std::memcmp(magic.data(), kMagic, 4) != 0) {
        throw FormatError(0, "bad magic");
    }
    const std::uint64_t version_offset = r.offset();
    const std::uint16_t version = r.u16("version");
    if (version != kGalleryVersion) {
        throw Error(ErrorCode::VersionUnsupported, "dataset",
                    "gallery version " + std::to_string(version) + " at offset " + std::to_string(version_offset));
    }
    const std::uint32_t count = r.u32("entry count");

    std::vector<GalleryEntry> entries;
    for (std::uint32_t i = 0; i < count; ++i) {
        const std::uint64_t entry_offset = r.offset();
        std::string id = r.string16("subject id");
        if (id.empty()) {
            throw FormatError(entry_offset, "empty subject id");
        }
        std::string condition = r.string16("condition");
        const auto angle = static_cast<std::int16_t>(r.u16("view angle"));
        const std::uint64_t dims_offset = r.offset();
        const std::uint16_t height = r.u16("height");
        const std::uint16_t width = r.u16("width");
        if (height == 0 || width == 0) {
            throw FormatError(dims_offset, "zero GEI dimension");
        }
        const std::size_t n = static_cast<std::size_t>(height) * width;
        const std::uint64_t values_offset = r.offset();
        const auto raw = r.take(n * 4, "GEI values");
        std::vector<float> values(n);
        for (std::size_t k = 0; k < n; ++k) {
            const auto* b = raw.data() + 4 * k;
            const std::uint32_t u = static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
                                    (static_cast<std::uint32_t>(b[2]) << 16) |
                                    (static_cast<std::uint32_t>(b[3]) << 24);
            values[k] = std::bit_cast<float>(u);
            if (!(values[k] >= 0.0f && values[k] <= 1.0f)) {
                throw FormatError(values_offset + 4 * k, "GEI value outside [0,1]");
            }
        }
        entries.push_back(GalleryEntry{std::move(id), std::move(condition), angle,
                                       GaitEnergyImage(height, width, std::move(values))});
    }
    if (!r.at_end()) {
        throw FormatError(r.offset(), "trailing bytes after last entry");
    }
    return Gallery(std::move(entries));
}

void save_gallery(const Gallery& gallery, const fs::path& path) {
    const auto bytes = encode_gallery(gallery);
    write_file_atomic(path, bytes);
}

Gallery load_gallery(const fs::path& path) {
    std::error_code ec;
    if (!fs::is_regular_file(path, ec)) {
        throw Error(ErrorCode::IoError, "dataset", "not a readable file: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "dataset", "cannot read " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorCode::IoError, "dataset", "read failed for " + path.string());
    }
    return decode_gallery(bytes);
}

}  // namespace geikit
