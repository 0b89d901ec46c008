#include "adugs/masking/segmenter.hpp"

#include <algorithm>
#include <cmath>

namespace adugs::masking {

namespace {

struct PixelRect {
  int x0, x1, y0, y1;  // half-open, clamped to the grid
};

// Pixels whose integer coordinate lies inside the box.
PixelRect box_pixels(const BoundingBox& box, int w, int h) {
  PixelRect r;
  r.x0 = std::max(0, static_cast<int>(std::ceil(box.left())));
  r.x1 = std::min(w, static_cast<int>(std::floor(box.right())) + 1);
  r.y0 = std::max(0, static_cast<int>(std::ceil(box.top())));
  r.y1 = std::min(h, static_cast<int>(std::floor(box.bottom())) + 1);
  return r;
}

}  // namespace

bool SilhouetteSpec::covers(double px, double py) const {
  const double dx = std::fabs(px - box.cx);
  const double dy = std::fabs(py - box.cy);
  if (dx > 0.5 * box.w || dy > 0.5 * box.h) return false;
  const double cx = dx - (0.5 * box.w - corner_radius);
  const double cy = dy - (0.5 * box.h - corner_radius);
  if (cx <= 0.0 || cy <= 0.0) return true;
  return cx * cx + cy * cy <= corner_radius * corner_radius;
}

BinaryMask BoxFillSegmenter::segment(const SegmentContext& ctx,
                                     const BoundingBox& prompt) {
  BinaryMask out(ctx.width, ctx.height);
  const PixelRect r = box_pixels(prompt, ctx.width, ctx.height);
  for (int y = r.y0; y < r.y1; ++y) {
    std::uint8_t* row = out.row(y);
    for (int x = r.x0; x < r.x1; ++x) row[x] = 1;
  }
  return out;
}

BinaryMask OracleSilhouetteSegmenter::segment(const SegmentContext& ctx,
                                              const BoundingBox& prompt) {
  BinaryMask out(ctx.width, ctx.height);
  const PixelRect r = box_pixels(prompt, ctx.width, ctx.height);
  for (int y = r.y0; y < r.y1; ++y) {
    std::uint8_t* row = out.row(y);
    for (int x = r.x0; x < r.x1; ++x) {
      for (const SilhouetteSpec& s : ctx.silhouettes) {
        if (s.covers(x, y)) {
          row[x] = 1;
          break;
        }
      }
    }
  }
  return out;
}

NoisySegmenter::NoisySegmenter(std::unique_ptr<Segmenter> inner,
                               double flip_prob, int max_speckles,
                               std::uint64_t seed)
    : inner_(std::move(inner)),
      flip_prob_(flip_prob),
      max_speckles_(max_speckles),
      rng_(seed, "segment_noise") {}

BinaryMask NoisySegmenter::segment(const SegmentContext& ctx,
                                   const BoundingBox& prompt) {
  BinaryMask out = inner_->segment(ctx, prompt);
  const PixelRect r = box_pixels(prompt, ctx.width, ctx.height);
  if (r.x1 <= r.x0 || r.y1 <= r.y0) return out;

  const BinaryMask base = out;
  for (int y = r.y0; y < r.y1; ++y) {
    for (int x = r.x0; x < r.x1; ++x) {
      const bool v = base.at(x, y);
      const bool edge = base.test(x - 1, y) != v || base.test(x + 1, y) != v ||
                        base.test(x, y - 1) != v || base.test(x, y + 1) != v;
      if (edge && rng_.bernoulli(flip_prob_)) out.set(x, y, !v);
    }
  }
  const int n_speckles = rng_.uniform_int(0, max_speckles_);
  for (int i = 0; i < n_speckles; ++i) {
    const int x = rng_.uniform_int(r.x0, r.x1 - 1);
    const int y = rng_.uniform_int(r.y0, r.y1 - 1);
    out.set(x, y, true);
    // second pixel makes it a 2 px speckle when it stays inside the box
    const int x2 = x + 1;
    if (x2 < r.x1 && rng_.bernoulli(0.5)) out.set(x2, y, true);
  }
  return out;
}

}  // namespace adugs::masking
