#pragma once

#include <utility>
#include <vector>

#include "adugs/odometry/registration.hpp"

namespace adugs::metrics {

using odometry::Trajectory;

struct Alignment {
  PoseSE2 transform;   // applied to the estimate
  double scale = 1.0;  // 1 unless fitted with scale
};

struct AteReport {
  double rmse = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double max = 0.0;
  std::vector<double> per_frame;  // one entry per associated pair
  Alignment alignment;
};

struct CrReport {
  double correct_rate = 0.0;
  double epsilon = 0.0;  // meters
};

/// Pairs (est index, gt index): nearest est timestamp per gt timestamp,
/// associated when within half the median gt frame period.
std::vector<std::pair<int, int>> associate_timestamps(const Trajectory& est,
                                                      const Trajectory& gt);

/// Least-squares fit of gt ~ T * est over associated positions (similarity
/// when with_scale). Throws NumericalError with fewer than two associations
/// or coincident estimate positions.
Alignment align_umeyama(const Trajectory& est, const Trajectory& gt,
                        bool with_scale);

/// Per-frame position error after rigid alignment; RMSE over associated
/// pairs.
AteReport ate_rmse(const Trajectory& est, const Trajectory& gt);

/// Fraction of gt timestamps whose associated, aligned estimate lies within
/// epsilon. Missing estimates count as incorrect; never throws.
CrReport correct_rate(const Trajectory& est, const Trajectory& gt,
                      double epsilon);

}  // namespace adugs::metrics
