#pragma once

#include <span>
#include <vector>

#include "adugs/core/pose.hpp"

namespace adugs::odometry {

struct Correspondence {
  Point2 prev;  // camera-frame coords in frame i-1, meters
  Point2 curr;  // camera-frame coords in frame i, meters
  int feature_id = 0;
};

struct RelPoseEstimate {
  PoseSE2 transform;        // T minimizing sum ||T * prev - curr||^2
  double residual_rms = 0;  // meters
};

/// Closed-form least-squares rigid fit: centroid subtraction, angle from
/// atan2 of the cross/dot accumulators of the centered pairs.
/// Throws NumericalError with fewer than 2 correspondences or when all prev
/// points coincide. When trimmed is set, drops the worst 10% of residuals
/// after a first solve and re-solves once.
RelPoseEstimate estimate_relative_pose(std::span<const Correspondence> pairs,
                                       bool trimmed = false);

struct TimedPose {
  double t = 0.0;
  PoseSE2 pose;

  bool operator==(const TimedPose&) const = default;
};

struct Trajectory {
  std::vector<TimedPose> points;

  bool operator==(const Trajectory&) const = default;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
};

/// Appends compose(last pose, rel) at the given timestamp. An empty
/// trajectory composes from the identity. Throws ConfigError when the
/// timestamp does not increase.
void accumulate(Trajectory& traj, const PoseSE2& rel, double timestamp);

}  // namespace adugs::odometry
