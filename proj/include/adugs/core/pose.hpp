#pragma once

#include "adugs/core/types.hpp"

namespace adugs {

/// Planar rigid pose. theta is kept in (-pi, pi]; a tie at -pi maps to +pi.
struct PoseSE2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  bool operator==(const PoseSE2&) const = default;
};

/// Wraps an angle into (-pi, pi].
double wrap_angle(double theta);

PoseSE2 pose_compose(const PoseSE2& a, const PoseSE2& b);
PoseSE2 pose_inverse(const PoseSE2& a);
Point2 transform_point(const PoseSE2& pose, const Point2& p);

}  // namespace adugs
