#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>

#include "geikit/dataset.hpp"
#include "geikit/error.hpp"
#include "geikit/rng.hpp"

namespace geikit {

namespace {

constexpr double kLegSwing = 0.45;      // radians, peak hip angle
constexpr double kKneeShortening = 0.5; // fraction of leg length lost at peak swing

struct Point {
    double x;
    double y;
};

class Canvas {
public:
    Canvas(std::size_t h, std::size_t w) : frame_(h, w) {}

    void disc(Point c, double r) {
        fill_box(c.x - r, c.y - r, c.x + r, c.y + r, [&](double x, double y) {
            return (x - c.x) * (x - c.x) + (y - c.y) * (y - c.y) <= r * r;
        });
    }

    void rect(double x0, double y0, double x1, double y1) {
        fill_box(x0, y0, x1, y1, [&](double x, double y) { return x >= x0 && x <= x1 && y >= y0 && y <= y1; });
    }

    void segment(Point a, Point b, double thickness) {
        const double half = thickness / 2.0;
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double len2 = dx * dx + dy * dy;
        fill_box(std::min(a.x, b.x) - half, std::min(a.y, b.y) - half, std::max(a.x, b.x) + half,
                 std::max(a.y, b.y) + half, [&](double x, double y) {
                     double t = len2 > 0 ? ((x - a.x) * dx + (y - a.y) * dy) / len2 : 0.0;
                     t = std::clamp(t, 0.0, 1.0);
                     const double px = a.x + t * dx - x;
                     const double py = a.y + t * dy - y;
                     return px * px + py * py <= half * half;
                 });
    }

    BinarySilhouette take() { return std::move(frame_); }

private:
    // Pixel (r, c) is sampled at its centre (c + 0.5, r + 0.5).
    template <typename Inside>
    void fill_box(double x0, double y0, double x1, double y1, Inside inside) {
        const auto h = static_cast<long>(frame_.height());
        const auto w = static_cast<long>(frame_.width());
        const long r0 = std::max(0L, static_cast<long>(std::floor(y0)));
        const long r1 = std::min(h - 1, static_cast<long>(std::ceil(y1)));
        const long c0 = std::max(0L, static_cast<long>(std::floor(x0)));
        const long c1 = std::min(w - 1, static_cast<long>(std::ceil(x1)));
        for (long r = r0; r <= r1; ++r) {
            for (long c = c0; c <= c1; ++c) {
                if (inside(static_cast<double>(c) + 0.5, static_cast<double>(r) + 0.5)) {
                    frame_.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), true);
                }
            }
        }
    }

    BinarySilhouette frame_;
};

struct Body {
    double head_radius;
    double torso_height;
    double arm_length;
    double margin;
};

Body body_of(const SynthWalkerSpec& spec) {
    Body b;
    b.head_radius = std::max(3.0, spec.torso_width * 0.5);
    b.torso_height = spec.leg_length * 0.75;
    b.arm_length = b.torso_height * 0.85;
    b.margin = 4.0;
    return b;
}

}  // namespace

void SynthWalkerSpec::validate() const {
    auto fail = [](const std::string& why) { throw Error(ErrorCode::SpecInvalid, "dataset", why); };
    if (stride_period < 4) fail("stride_period must be at least 4");
    if (frame_count < stride_period) fail("frame_count must be at least stride_period");
    if (!(torso_width >= 2.0)) fail("torso_width must be at least 2");
    if (!(leg_length >= 8.0)) fail("leg_length must be at least 8");
    if (!(arm_swing_amplitude >= 0.0)) fail("arm_swing_amplitude must be nonnegative");
    if (subject_id.empty()) fail("subject id must not be empty");

    const Body b = body_of(*this);
    if (arm_swing_amplitude >= b.arm_length) fail("arm_swing_amplitude must be below the arm length");
    const double height = 2 * b.head_radius + b.torso_height + leg_length + 2 * b.margin;
    const double width = std::max({2 * leg_length * std::sin(kLegSwing) + torso_width,
                                   torso_width + 2 * arm_swing_amplitude + 4, 2 * b.head_radius}) +
                         2 * b.margin;
    if (height > static_cast<double>(canvas_height) || width > static_cast<double>(canvas_width)) {
        fail("walker does not fit the canvas");
    }
}

SilhouetteSequence generate_walker(const SynthWalkerSpec& spec) {
    spec.validate();
    const Body body = body_of(spec);
    const double T = static_cast<double>(spec.stride_period);
    const std::size_t phase_offset = static_cast<std::size_t>(spec.seed % spec.stride_period);

    const double cx = static_cast<double>(spec.canvas_width) / 2.0;
    const double total = 2 * body.head_radius + body.torso_height + spec.leg_length;
    const double top = (static_cast<double>(spec.canvas_height) - total) / 2.0;
    const double neck = top + 2 * body.head_radius;
    const double hip = neck + body.torso_height;
    const double arm_angle = std::asin(spec.arm_swing_amplitude / body.arm_length);
    const double right_thick = std::max(3.0, spec.torso_width * 0.45);
    const double left_thick = std::max(2.0, spec.torso_width * 0.25);

    SilhouetteSequence seq;
    seq.subject_id = spec.subject_id;
    seq.condition = spec.condition;
    seq.view_angle = spec.view_angle;
    seq.frames.reserve(spec.frame_count);

    for (std::size_t t = 0; t < spec.frame_count; ++t) {
        // Integer phase index keeps the sequence exactly periodic.
        const std::size_t k = (t + phase_offset) % spec.stride_period;
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(k) / T;
        const double s = std::sin(phi);

        Canvas canvas(spec.canvas_height, spec.canvas_width);
        canvas.disc({cx, top + body.head_radius}, body.head_radius);
        canvas.rect(cx - spec.torso_width / 2, neck, cx + spec.torso_width / 2, hip);

        const double right_angle = kLegSwing * s;
        const double right_len = spec.leg_length * (1.0 - kKneeShortening * std::max(0.0, s));
        const double left_angle = -kLegSwing * s;
        const Point hip_r{cx + spec.torso_width * 0.15, hip};
        const Point hip_l{cx - spec.torso_width * 0.15, hip};
        canvas.segment(hip_r, {hip_r.x + right_len * std::sin(right_angle), hip + right_len * std::cos(right_angle)},
                       right_thick);
        canvas.segment(hip_l,
                       {hip_l.x + spec.leg_length * std::sin(left_angle), hip + spec.leg_length * std::cos(left_angle)},
                       left_thick);

        const double shoulder = neck + 2.0;
        for (double side : {-1.0, 1.0}) {
            const Point sh{cx + side * (spec.torso_width / 2 + 1.0), shoulder};
            const double a = -side * arm_angle * s;
            canvas.segment(sh, {sh.x + body.arm_length * std::sin(a), shoulder + body.arm_length * std::cos(a)}, 3.0);
        }
        seq.frames.push_back(canvas.take());
    }
    return seq;
}

SynthWalkerSpec population_walker(std::size_t index, std::uint64_t seed, std::size_t stride_period,
                                  std::size_t frame_count) {
    SynthWalkerSpec spec;
    spec.stride_period = stride_period;
    spec.frame_count = frame_count;
    spec.torso_width = 10.0 + static_cast<double>((index * 7) % 11);
    spec.leg_length = 40.0 + static_cast<double>((index * 13) % 21);
    spec.arm_swing_amplitude = 4.0 + static_cast<double>((index * 5) % 13);
    spec.seed = RandomStream(seed).split(index).key();
    char id[16];
    std::snprintf(id, sizeof id, "%03zu", index + 1);
    spec.subject_id = id;
    return spec;
}

}  // namespace geikit
