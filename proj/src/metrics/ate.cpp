#include "adugs/metrics/ate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "adugs/core/error.hpp"

namespace adugs::metrics {

namespace {

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Point2 apply(const Alignment& a, const Point2& p) {
  const double c = std::cos(a.transform.theta);
  const double s = std::sin(a.transform.theta);
  return {a.transform.x + a.scale * (c * p.x - s * p.y),
          a.transform.y + a.scale * (s * p.x + c * p.y)};
}

Alignment fit(const Trajectory& est, const Trajectory& gt,
              const std::vector<std::pair<int, int>>& pairs, bool with_scale) {
  if (pairs.size() < 2) {
    throw NumericalError("align_umeyama: needs at least 2 associated poses");
  }
  const auto n = static_cast<double>(pairs.size());
  Point2 ce{0, 0}, cg{0, 0};
  for (const auto& [ei, gi] : pairs) {
    ce.x += est.points[ei].pose.x;
    ce.y += est.points[ei].pose.y;
    cg.x += gt.points[gi].pose.x;
    cg.y += gt.points[gi].pose.y;
  }
  ce.x /= n;
  ce.y /= n;
  cg.x /= n;
  cg.y /= n;

  double dot = 0.0, cross = 0.0, spread = 0.0;
  for (const auto& [ei, gi] : pairs) {
    const double px = est.points[ei].pose.x - ce.x;
    const double py = est.points[ei].pose.y - ce.y;
    const double qx = gt.points[gi].pose.x - cg.x;
    const double qy = gt.points[gi].pose.y - cg.y;
    dot += px * qx + py * qy;
    cross += px * qy - py * qx;
    spread += px * px + py * py;
  }
  if (spread <= 1e-18) {
    throw NumericalError("align_umeyama: degenerate estimate geometry");
  }

  Alignment a;
  a.transform.theta = std::atan2(cross, dot);
  a.scale = with_scale ? std::hypot(dot, cross) / spread : 1.0;
  const double c = std::cos(a.transform.theta);
  const double s = std::sin(a.transform.theta);
  a.transform.x = cg.x - a.scale * (c * ce.x - s * ce.y);
  a.transform.y = cg.y - a.scale * (s * ce.x + c * ce.y);
  return a;
}

}  // namespace

std::vector<std::pair<int, int>> associate_timestamps(const Trajectory& est,
                                                      const Trajectory& gt) {
  std::vector<std::pair<int, int>> pairs;
  if (est.empty() || gt.empty()) return pairs;

  // half the median gt frame period; a single gt stamp associates freely
  double max_dt = std::numeric_limits<double>::infinity();
  if (gt.size() > 1) {
    std::vector<double> diffs;
    diffs.reserve(gt.size() - 1);
    for (std::size_t i = 1; i < gt.size(); ++i) {
      diffs.push_back(gt.points[i].t - gt.points[i - 1].t);
    }
    max_dt = 0.5 * median_of(diffs);
  }

  std::size_t ei = 0;
  for (std::size_t gi = 0; gi < gt.size(); ++gi) {
    const double t = gt.points[gi].t;
    while (ei + 1 < est.size() &&
           std::fabs(est.points[ei + 1].t - t) <= std::fabs(est.points[ei].t - t)) {
      ++ei;
    }
    if (std::fabs(est.points[ei].t - t) <= max_dt) {
      pairs.emplace_back(static_cast<int>(ei), static_cast<int>(gi));
    }
  }
  return pairs;
}

Alignment align_umeyama(const Trajectory& est, const Trajectory& gt,
                        bool with_scale) {
  return fit(est, gt, associate_timestamps(est, gt), with_scale);
}

AteReport ate_rmse(const Trajectory& est, const Trajectory& gt) {
  const auto pairs = associate_timestamps(est, gt);
  AteReport rep;
  rep.alignment = fit(est, gt, pairs, false);

  double sq = 0.0;
  rep.per_frame.reserve(pairs.size());
  for (const auto& [ei, gi] : pairs) {
    const Point2 p = apply(rep.alignment,
                           {est.points[ei].pose.x, est.points[ei].pose.y});
    const double dx = p.x - gt.points[gi].pose.x;
    const double dy = p.y - gt.points[gi].pose.y;
    const double e = std::hypot(dx, dy);
    rep.per_frame.push_back(e);
    sq += e * e;
    rep.max = std::max(rep.max, e);
    rep.mean += e;
  }
  const auto n = static_cast<double>(pairs.size());
  rep.rmse = std::sqrt(sq / n);
  rep.mean /= n;
  rep.median = median_of(rep.per_frame);
  return rep;
}

CrReport correct_rate(const Trajectory& est, const Trajectory& gt,
                      double epsilon) {
  CrReport rep;
  rep.epsilon = epsilon;
  if (gt.empty()) return rep;

  const auto pairs = associate_timestamps(est, gt);
  if (pairs.size() < 2) return rep;  // cannot align: everything incorrect

  Alignment a;
  try {
    a = fit(est, gt, pairs, false);
  } catch (const NumericalError&) {
    return rep;
  }
  int correct = 0;
  for (const auto& [ei, gi] : pairs) {
    const Point2 p = apply(a, {est.points[ei].pose.x, est.points[ei].pose.y});
    const double e = std::hypot(p.x - gt.points[gi].pose.x,
                                p.y - gt.points[gi].pose.y);
    if (e <= epsilon) ++correct;
  }
  rep.correct_rate = static_cast<double>(correct) / static_cast<double>(gt.size());
  return rep;
}

}  // namespace adugs::metrics
