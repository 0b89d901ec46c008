#include "adugs/odometry/registration.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "adugs/core/error.hpp"

namespace adugs::odometry {

namespace {

RelPoseEstimate solve_rigid(std::span<const Correspondence> pairs) {
  const auto n = static_cast<double>(pairs.size());
  Point2 cp{0, 0}, cc{0, 0};
  for (const Correspondence& c : pairs) {
    cp.x += c.prev.x;
    cp.y += c.prev.y;
    cc.x += c.curr.x;
    cc.y += c.curr.y;
  }
  cp.x /= n;
  cp.y /= n;
  cc.x /= n;
  cc.y /= n;

  double dot = 0.0, cross = 0.0, spread = 0.0;
  for (const Correspondence& c : pairs) {
    const double px = c.prev.x - cp.x;
    const double py = c.prev.y - cp.y;
    const double qx = c.curr.x - cc.x;
    const double qy = c.curr.y - cc.y;
    dot += px * qx + py * qy;
    cross += px * qy - py * qx;
    spread += px * px + py * py;
  }
  if (spread <= 1e-18) {
    throw NumericalError("estimate_relative_pose: degenerate geometry");
  }

  const double theta = std::atan2(cross, dot);
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  RelPoseEstimate est;
  est.transform.theta = wrap_angle(theta);
  est.transform.x = cc.x - (ct * cp.x - st * cp.y);
  est.transform.y = cc.y - (st * cp.x + ct * cp.y);

  double sq = 0.0;
  for (const Correspondence& c : pairs) {
    const Point2 m = transform_point(est.transform, c.prev);
    const double dx = m.x - c.curr.x;
    const double dy = m.y - c.curr.y;
    sq += dx * dx + dy * dy;
  }
  est.residual_rms = std::sqrt(sq / n);
  return est;
}

}  // namespace

RelPoseEstimate estimate_relative_pose(std::span<const Correspondence> pairs,
                                       bool trimmed) {
  if (pairs.size() < 2) {
    throw NumericalError("estimate_relative_pose: needs at least 2 correspondences");
  }
  RelPoseEstimate est = solve_rigid(pairs);
  if (!trimmed || pairs.size() < 3) return est;

  std::vector<double> res(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Point2 m = transform_point(est.transform, pairs[i].prev);
    res[i] = std::hypot(m.x - pairs[i].curr.x, m.y - pairs[i].curr.y);
  }
  const auto drop = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(0.1 * pairs.size())));
  const std::size_t keep = std::max<std::size_t>(2, pairs.size() - drop);

  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return res[a] < res[b]; });
  std::vector<Correspondence> inliers;
  inliers.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) inliers.push_back(pairs[order[i]]);
  return solve_rigid(inliers);
}

void accumulate(Trajectory& traj, const PoseSE2& rel, double timestamp) {
  if (!traj.points.empty() && timestamp <= traj.points.back().t) {
    throw ConfigError("accumulate: timestamp must increase");
  }
  const PoseSE2 last = traj.points.empty() ? PoseSE2{} : traj.points.back().pose;
  traj.points.push_back({timestamp, pose_compose(last, rel)});
}

}  // namespace adugs::odometry
