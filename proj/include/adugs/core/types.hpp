#pragma once

#include <cmath>

namespace adugs {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point2&) const = default;
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned box in center format (cx, cy, w, h), pixels.
struct BoundingBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  double left() const { return cx - 0.5 * w; }
  double right() const { return cx + 0.5 * w; }
  double top() const { return cy - 0.5 * h; }
  double bottom() const { return cy + 0.5 * h; }
  double area() const { return w * h; }

  bool operator==(const BoundingBox&) const = default;

  bool valid() const {
    return w > 0.0 && h > 0.0 && std::isfinite(cx) && std::isfinite(cy) &&
           std::isfinite(w) && std::isfinite(h);
  }
};

/// Intersection over union of two boxes, in [0, 1].
double iou(const BoundingBox& a, const BoundingBox& b);

}  // namespace adugs
