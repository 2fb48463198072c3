#include "geikit/silhouette.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "geikit/error.hpp"

namespace geikit {

BinarySilhouette::BinarySilhouette(std::size_t height, std::size_t width)
    : BinarySilhouette(height, width, std::vector<std::uint8_t>(height * width, 0)) {}

BinarySilhouette::BinarySilhouette(std::size_t height, std::size_t width,
                                   std::vector<std::uint8_t> pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
    if (height_ == 0 || width_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "silhouette", "frame dimensions must be positive");
    }
    if (pixels_.size() != height_ * width_) {
        throw Error(ErrorCode::InvalidArgument, "silhouette",
                    "pixel count " + std::to_string(pixels_.size()) + " != " +
                        std::to_string(height_) + "x" + std::to_string(width_));
    }
    if (std::any_of(pixels_.begin(), pixels_.end(), [](std::uint8_t v) { return v > 1; })) {
        throw Error(ErrorCode::InvalidArgument, "silhouette", "pixel values must be 0 or 1");
    }
}

void NormalizationParams::validate() const {
    if (target_height < 2 || target_width < 2) {
        throw Error(ErrorCode::InvalidArgument, "silhouette", "target size must be at least 2x2");
    }
}

std::optional<Rect> bounding_box(const BinarySilhouette& frame) {
    std::optional<Rect> box;
    for (std::size_t r = 0; r < frame.height(); ++r) {
        for (std::size_t c = 0; c < frame.width(); ++c) {
            if (!frame.at(r, c)) {
                continue;
            }
            if (!box) {
                box = Rect{r, c, r, c};
            } else {
                box->top = std::min(box->top, r);
                box->bottom = std::max(box->bottom, r);
                box->left = std::min(box->left, c);
                box->right = std::max(box->right, c);
            }
        }
    }
    return box;
}

std::size_t foreground_count(const BinarySilhouette& frame) {
    const auto px = frame.pixels();
    return static_cast<std::size_t>(std::count(px.begin(), px.end(), std::uint8_t{1}));
}

namespace {

// Source index range [lo, hi] covered by output index i when resampling
// `src` samples onto `dst` samples.
struct Span1D {
    std::size_t lo;
    std::size_t hi;
};

Span1D footprint(std::size_t i, std::size_t src, std::size_t dst) {
    if (src >= dst) {
        return {i * src / dst, (i + 1) * src / dst - 1};
    }
    const std::size_t nn = (2 * i + 1) * src / (2 * dst);
    return {nn, nn};
}

}  // namespace

BinarySilhouette normalize(const BinarySilhouette& frame, const NormalizationParams& params) {
    params.validate();
    const auto box = bounding_box(frame);
    if (!box) {
        throw Error(ErrorCode::EmptySilhouette, "silhouette", "frame has no foreground pixel");
    }

    const std::size_t th = params.target_height;
    const std::size_t tw = params.target_width;
    const std::size_t roi_h = box->height();
    const std::size_t roi_w = box->width();
    const std::size_t scaled_w = std::max<std::size_t>(1, (2 * roi_w * th + roi_h) / (2 * roi_h));
    if (scaled_w > tw) {
        throw Error(ErrorCode::RoiTooWide, "silhouette",
                    "scaled width " + std::to_string(scaled_w) + " exceeds " + std::to_string(tw));
    }

    std::vector<Span1D> rows(th);
    for (std::size_t r = 0; r < th; ++r) {
        rows[r] = footprint(r, roi_h, th);
    }
    std::vector<Span1D> cols(scaled_w);
    for (std::size_t c = 0; c < scaled_w; ++c) {
        cols[c] = footprint(c, roi_w, scaled_w);
    }

    std::vector<std::uint8_t> scaled(th * scaled_w, 0);
    for (std::size_t r = 0; r < th; ++r) {
        for (std::size_t c = 0; c < scaled_w; ++c) {
            bool any = false;
            for (std::size_t sr = rows[r].lo; sr <= rows[r].hi && !any; ++sr) {
                for (std::size_t sc = cols[c].lo; sc <= cols[c].hi; ++sc) {
                    if (frame.at(box->top + sr, box->left + sc)) {
                        any = true;
                        break;
                    }
                }
            }
            scaled[r * scaled_w + c] = any ? 1 : 0;
        }
    }

    const std::size_t centroid_rows = params.centering == Centering::TopHalfCentroid ? th / 2 : th;
    double col_sum = 0.0;
    std::size_t count = 0;
    for (std::size_t r = 0; r < centroid_rows; ++r) {
        for (std::size_t c = 0; c < scaled_w; ++c) {
            if (scaled[r * scaled_w + c]) {
                col_sum += static_cast<double>(c);
                ++count;
            }
        }
    }
    // The top row of the ROI always holds foreground, so count > 0.
    const long centroid = std::lround(col_sum / static_cast<double>(count));
    const long offset = static_cast<long>(tw / 2) - centroid;
    if (offset < 0 || offset + static_cast<long>(scaled_w) > static_cast<long>(tw)) {
        throw Error(ErrorCode::RoiTooWide, "silhouette",
                    "centred silhouette does not fit width " + std::to_string(tw));
    }

    std::vector<std::uint8_t> out(th * tw, 0);
    for (std::size_t r = 0; r < th; ++r) {
        std::copy_n(scaled.begin() + static_cast<std::ptrdiff_t>(r * scaled_w), scaled_w,
                    out.begin() + static_cast<std::ptrdiff_t>(r * tw + static_cast<std::size_t>(offset)));
    }
    return BinarySilhouette(th, tw, std::move(out));
}

std::vector<BinarySilhouette> normalize_all(std::span<const BinarySilhouette> frames,
                                            const NormalizationParams& params) {
    std::vector<BinarySilhouette> out;
    out.reserve(frames.size());
    for (const auto& f : frames) {
        out.push_back(normalize(f, params));
    }
    return out;
}

}  // namespace geikit
