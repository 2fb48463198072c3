#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>

#include "geikit/image_io.hpp"
#include "geikit/matching.hpp"
#include "geikit/sequence.hpp"

namespace geikit {

// root/subject/condition/angle, with the angle zero-padded to three digits as
// CASIA-B does ("090"). An unpadded directory ("90") is accepted when the
// padded one is absent.
std::filesystem::path sequence_directory(const std::filesystem::path& root, const std::string& subject,
                                         const std::string& condition, int angle);

// Foreground is luminance >= 128, except that an image whose samples are all
// 0 or 1 is treated as already binary (nonzero = foreground).
BinarySilhouette binarize(const GrayImage& image);

// Loads every supported image in `dir` in lexicographic filename order.
// Throws PathNotFound, NoFrames or DecodeError (naming the file).
std::vector<BinarySilhouette> load_frames(const std::filesystem::path& dir);

SilhouetteSequence load_sequence(const std::filesystem::path& root, const std::string& subject,
                                 const std::string& condition, int angle);

// Writes frames as frame_NNN.png (0/255) into the sequence directory under
// root, creating it. Returns that directory. Throws IoError.
std::filesystem::path write_sequence(const std::filesystem::path& root, const SilhouetteSequence& sequence);

// Crude articulated walker: head disc, torso rectangle, two arms and two legs
// as thick segments swinging sinusoidally with period stride_period. The
// right leg bends (shortens) during its swing phase and is drawn thicker, so
// the leg-region foreground count repeats once per stride rather than once
// per step.
struct SynthWalkerSpec {
    std::size_t stride_period = 20;
    double torso_width = 14.0;
    double leg_length = 50.0;
    double arm_swing_amplitude = 10.0;
    std::size_t frame_count = 60;
    std::size_t canvas_height = 160;
    std::size_t canvas_width = 120;
    std::uint64_t seed = 1;
    std::string subject_id = "001";
    std::string condition = "nm-01";
    int view_angle = 90;

    // Throws SpecInvalid.
    void validate() const;
};

SilhouetteSequence generate_walker(const SynthWalkerSpec& spec);

// Walker `index` of a deterministic population with pairwise distinct body
// proportions (torso width, leg length, arm swing). The seed only shifts the
// starting phase. Subject ids are zero-padded indices starting at "001".
SynthWalkerSpec population_walker(std::size_t index, std::uint64_t seed, std::size_t stride_period = 20,
                                  std::size_t frame_count = 60);

// Little-endian gallery file:
//   "GEIG", u16 version = 1, u32 entry_count, then per entry
//   u16 id_len, id bytes, u16 condition_len, condition bytes, i16 view_angle,
//   u16 height, u16 width, height*width f32 values row-major.
inline constexpr std::uint16_t kGalleryVersion = 1;

std::vector<std::uint8_t> encode_gallery(const Gallery& gallery);
// Throws FormatError(offset, reason) or VersionUnsupported.
Gallery decode_gallery(std::span<const std::uint8_t> bytes);

// Writes to a temporary sibling and renames it over `path`, so readers see
// either the old file or the new one. Throws IoError.
void save_gallery(const Gallery& gallery, const std::filesystem::path& path);
Gallery load_gallery(const std::filesystem::path& path);

// Writes data atomically (temp file + rename). Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> data);

}  // namespace geikit
