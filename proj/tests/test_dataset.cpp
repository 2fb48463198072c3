#include <doctest.h>

#include <fstream>

#include "geikit/cycle.hpp"
#include "geikit/dataset.hpp"
#include "geikit/error.hpp"
#include "geikit/gei.hpp"
#include "geikit/rng.hpp"
#include "temp_dir.hpp"

using namespace geikit;
namespace fs = std::filesystem;

namespace {

void write_bytes(const fs::path& p, const std::string& bytes) {
    std::ofstream(p, std::ios::binary) << bytes;
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GrayImage stripe(std::size_t col) {
    GrayImage img{4, 6, std::vector<std::uint8_t>(24, 0)};
    for (std::size_t r = 0; r < 4; ++r) img.pixels[r * 6 + col] = 255;
    return img;
}

Gallery random_gallery(RandomStream rng) {
    std::vector<GalleryEntry> entries;
    const std::size_t n = rng.bits(0) % 5;
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = rng.split(i);
        const std::size_t h = 1 + s.bits(1) % 9;
        const std::size_t w = 1 + s.bits(2) % 9;
        std::vector<float> v(h * w);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = static_cast<float>(s.uniform(100 + k));
        entries.push_back({"id-" + std::to_string(s.bits(3) % 1000), "nm-0" + std::to_string(i),
                           static_cast<int>(s.bits(4) % 361) - 180, GaitEnergyImage(h, w, std::move(v))});
    }
    return Gallery(std::move(entries));
}

}  // namespace

TEST_CASE("load_sequence reads frames in filename order") {
    TempDir tmp;
    const auto dir = tmp.path() / "007" / "nm-01" / "090";
    fs::create_directories(dir);
    write_png(dir / "frame_002.png", stripe(2));
    write_png(dir / "frame_000.png", stripe(0));
    write_png(dir / "frame_001.png", stripe(1));
    write_bytes(dir / "notes.txt", "ignored");

    const auto seq = load_sequence(tmp.path(), "007", "nm-01", 90);
    REQUIRE(seq.frames.size() == 3);
    for (std::size_t t = 0; t < 3; ++t) CHECK(seq.frames[t].at(0, t) == 1);
    CHECK(seq.subject_id == "007");
    CHECK(seq.view_angle == 90);
}

TEST_CASE("load_sequence accepts an unpadded angle directory") {
    TempDir tmp;
    fs::create_directories(tmp.path() / "s" / "bg-01" / "18");
    write_png(tmp.path() / "s" / "bg-01" / "18" / "a.png", stripe(0));
    CHECK(load_sequence(tmp.path(), "s", "bg-01", 18).frames.size() == 1);
}

TEST_CASE("load_sequence errors") {
    TempDir tmp;
    CHECK_THROWS_WITH_AS(load_sequence(tmp.path(), "x", "nm-01", 0), doctest::Contains("PathNotFound"), Error);

    fs::create_directories(tmp.path() / "x" / "nm-01" / "000");
    CHECK_THROWS_WITH_AS(load_sequence(tmp.path(), "x", "nm-01", 0), doctest::Contains("NoFrames"), Error);

    write_png(tmp.path() / "x" / "nm-01" / "000" / "f0.png", stripe(0));
    write_bytes(tmp.path() / "x" / "nm-01" / "000" / "f1.png", "\x89PNG\r\n\x1a\n garbage garbage");
    CHECK_THROWS_WITH_AS(load_sequence(tmp.path(), "x", "nm-01", 0), doctest::Contains("f1.png"), Error);
    try {
        (void)load_sequence(tmp.path(), "x", "nm-01", 0);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DecodeError);
    }
}

TEST_CASE("Netpbm frames and binarization") {
    TempDir tmp;
    write_bytes(tmp / "a.pgm", std::string("P5\n3 2\n255\n") + std::string("\x00\x80\x7f\xff\x00\x10", 6));
    write_bytes(tmp / "b.pbm", "P1\n# comment\n3 2\n0 1 0\n1 0 1\n");
    const auto frames = load_frames(tmp.path());
    REQUIRE(frames.size() == 2);
    CHECK(frames[0] == BinarySilhouette(2, 3, {0, 1, 0, 1, 0, 0}));
    CHECK(frames[1] == BinarySilhouette(2, 3, {1, 0, 1, 0, 1, 0}));

    // Samples already in {0,1}: nonzero is foreground.
    CHECK(binarize(GrayImage{1, 3, {0, 1, 1}}) == BinarySilhouette(1, 3, {0, 1, 1}));
    CHECK(binarize(GrayImage{1, 3, {0, 127, 128}}) == BinarySilhouette(1, 3, {0, 0, 1}));
}

TEST_CASE("write_sequence round-trips through load_sequence") {
    TempDir tmp;
    SynthWalkerSpec spec;
    spec.frame_count = 24;
    const auto seq = generate_walker(spec);
    write_sequence(tmp.path(), seq);
    const auto back = load_sequence(tmp.path(), spec.subject_id, spec.condition, spec.view_angle);
    CHECK(back.frames == seq.frames);
}

TEST_CASE("generate_walker") {
    SynthWalkerSpec spec;
    spec.stride_period = 20;
    spec.frame_count = 60;

    SUBCASE("period is recoverable") {
        const auto seq = generate_walker(spec);
        const auto frames = normalize_all(seq.frames, {});
        CHECK(estimate_period(gait_signal(frames), 6, 30).period == 20);
    }
    SUBCASE("deterministic and strictly binary") {
        const auto a = generate_walker(spec);
        CHECK(generate_walker(spec).frames == a.frames);
        for (const auto& f : a.frames) CHECK(foreground_count(f) > 0);
    }
    SUBCASE("leg length changes the GEI") {
        auto other = spec;
        other.leg_length = 58;
        const auto ga = compute_gei(normalize_all(generate_walker(spec).frames, {}));
        const auto gb = compute_gei(normalize_all(generate_walker(other).frames, {}));
        CHECK(gei_distance(ga, gb) > 0.0);
    }
    SUBCASE("exact periodicity") {
        const auto seq = generate_walker(spec);
        for (std::size_t t = 0; t + 20 < seq.frames.size(); ++t) CHECK(seq.frames[t] == seq.frames[t + 20]);
    }
    SUBCASE("invalid specs") {
        auto bad = spec;
        bad.stride_period = 3;
        CHECK_THROWS_WITH_AS(generate_walker(bad), doctest::Contains("SpecInvalid"), Error);
        bad = spec;
        bad.frame_count = 10;
        CHECK_THROWS_AS(generate_walker(bad), Error);
        bad = spec;
        bad.leg_length = 400;
        CHECK_THROWS_AS(generate_walker(bad), Error);
    }
    SUBCASE("population members are pairwise distinct") {
        for (std::size_t i = 0; i < 10; ++i) {
            for (std::size_t j = i + 1; j < 10; ++j) {
                const auto a = population_walker(i, 1);
                const auto b = population_walker(j, 1);
                CHECK((a.torso_width != b.torso_width || a.leg_length != b.leg_length ||
                       a.arm_swing_amplitude != b.arm_swing_amplitude));
            }
        }
        CHECK(population_walker(0, 1).subject_id == "001");
    }
}

TEST_CASE("gallery file format") {
    TempDir tmp;
    SUBCASE("byte layout") {
        const Gallery g({{"ab", "c", -90, GaitEnergyImage(1, 2, {1.0f, 0.5f})}});
        const auto bytes = encode_gallery(g);
        const std::vector<std::uint8_t> expected{
            'G', 'E', 'I', 'G', 1, 0, 1, 0, 0, 0,  // magic, version, count
            2, 0, 'a', 'b', 1, 0, 'c',             // id, condition
            0xa6, 0xff,                            // -90
            1, 0, 2, 0,                            // 1x2
            0x00, 0x00, 0x80, 0x3f,                // 1.0f
            0x00, 0x00, 0x00, 0x3f,                // 0.5f
        };
        CHECK(bytes == expected);
    }
    SUBCASE("empty gallery") {
        save_gallery(Gallery(), tmp / "g.bin");
        CHECK(load_gallery(tmp / "g.bin").empty());
        CHECK(read_bytes(tmp / "g.bin").size() == 10);
    }
    SUBCASE("three entries in order") {
        const auto g = random_gallery(RandomStream(5)).with_entry({"x", "", 0, GaitEnergyImage(1, 1, {0.25f})})
                           .with_entry({"y", "", 1, GaitEnergyImage(1, 1, {0.75f})})
                           .with_entry({"z", "", 2, GaitEnergyImage(1, 1, {1.0f})});
        save_gallery(g, tmp / "g.bin");
        CHECK(load_gallery(tmp / "g.bin") == g);
        for (const auto& e : fs::directory_iterator(tmp.path())) CHECK(e.path().filename() == "g.bin");
    }
    SUBCASE("wrong magic") {
        auto bytes = encode_gallery(Gallery());
        bytes[0] = 'X';
        try {
            (void)decode_gallery(bytes);
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.offset() == 0);
        }
    }
    SUBCASE("unsupported version") {
        auto bytes = encode_gallery(Gallery());
        bytes[4] = 2;
        CHECK_THROWS_WITH_AS(decode_gallery(bytes), doctest::Contains("VersionUnsupported"), Error);
    }
    SUBCASE("every truncation is rejected") {
        const auto bytes = encode_gallery(random_gallery(RandomStream(8)).with_entry(
            {"q", "nm", 3, GaitEnergyImage(2, 2, {0, 0.5f, 1, 0.25f})}));
        for (std::size_t n = 0; n < bytes.size(); ++n) {
            CAPTURE(n);
            CHECK_THROWS_AS(decode_gallery(std::span(bytes).first(n)), FormatError);
        }
        auto longer = bytes;
        longer.push_back(0);
        CHECK_THROWS_AS(decode_gallery(longer), FormatError);
    }
    SUBCASE("out-of-range value") {
        auto bytes = encode_gallery(Gallery({{"a", "", 0, GaitEnergyImage(1, 1, {0.5f})}}));
        bytes.back() = 0x40;  // 2.0f
        CHECK_THROWS_AS(decode_gallery(bytes), FormatError);
    }
    SUBCASE("random galleries round-trip") {
        for (std::uint64_t s = 0; s < 20; ++s) {
            const auto g = random_gallery(RandomStream(s));
            CHECK(decode_gallery(encode_gallery(g)) == g);
        }
    }
    SUBCASE("missing or directory path") {
        CHECK_THROWS_WITH_AS(load_gallery(tmp / "absent.bin"), doctest::Contains("IoError"), Error);
        CHECK_THROWS_AS(load_gallery(tmp.path()), Error);
        CHECK_THROWS_AS(save_gallery(Gallery(), tmp.path() / "no" / "such" / "dir.bin"), Error);
    }
}
