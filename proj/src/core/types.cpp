#include "adugs/core/types.hpp"

#include <algorithm>

namespace adugs {

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double ix = std::min(a.right(), b.right()) - std::max(a.left(), b.left());
  const double iy = std::min(a.bottom(), b.bottom()) - std::max(a.top(), b.top());
  if (ix <= 0.0 || iy <= 0.0) return 0.0;
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace adugs
