#include "adugs/core/pose.hpp"

#include <cmath>
#include <numbers>

namespace adugs {

double wrap_angle(double theta) {
  constexpr double pi = std::numbers::pi;
  double t = std::fmod(theta, 2.0 * pi);
  if (t <= -pi) t += 2.0 * pi;
  if (t > pi) t -= 2.0 * pi;
  return t;
}

PoseSE2 pose_compose(const PoseSE2& a, const PoseSE2& b) {
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  return {a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y,
          wrap_angle(a.theta + b.theta)};
}

PoseSE2 pose_inverse(const PoseSE2& a) {
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  return {-(c * a.x + s * a.y), -(-s * a.x + c * a.y), wrap_angle(-a.theta)};
}

Point2 transform_point(const PoseSE2& pose, const Point2& p) {
  const double c = std::cos(pose.theta);
  const double s = std::sin(pose.theta);
  return {pose.x + c * p.x - s * p.y, pose.y + s * p.x + c * p.y};
}

}  // namespace adugs
