#pragma once

#include <Eigen/Dense>
#include <deque>
#include <span>

#include "adugs/core/types.hpp"

namespace adugs::tracker {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Mat48 = Eigen::Matrix<double, 4, 8>;

/// One detection in measurement space (x, y, w, h).
struct Measurement {
  double x = 0.0, y = 0.0, w = 0.0, h = 0.0;

  bool operator==(const Measurement&) const = default;

  Vec4 vec() const { return {x, y, w, h}; }
  BoundingBox box() const { return {x, y, w, h}; }
  static Measurement from_box(const BoundingBox& b) {
    return {b.cx, b.cy, b.w, b.h};
  }
};

/// Constant-velocity model over the 8-component box state
/// (x, y, w, h, vx, vy, vw, vh), unit frame step.
struct KalmanModel {
  Mat8 F;
  Mat48 H;
  Mat8 Q;
  Mat8 P0;
  Mat4 R_init;

  static KalmanModel standard();
};

/// Parameters of the residual-driven measurement-noise update
/// R = diag(max(beta * erf(lambda * delta_rmse), floor_eps)).
struct AdaptiveNoiseConfig {
  double lambda = 0.1;     // 1/px, transition steepness
  double beta = 10.0;      // px^2, output magnitude
  int window_len = 10;     // sliding window N
  double floor_eps = 1e-3; // px^2, keeps R positive definite
  int min_samples = 3;     // residuals required before adapting
};

enum class TrackStatus { Tentative, Confirmed, Coasting, Deleted };

struct Track {
  int id = 0;
  Vec8 state = Vec8::Zero();
  Mat8 P = Mat8::Zero();
  std::deque<Vec4> residual_window;
  int hits = 1;
  int age = 0;
  int time_since_update = 0;
  TrackStatus status = TrackStatus::Tentative;

  /// Box from the state head; w/h floored at 1 px so the box stays valid.
  BoundingBox box() const {
    return {state(0), state(1), std::max(state(2), 1.0),
            std::max(state(3), 1.0)};
  }
};

/// state <- F state, P <- F P F^T + Q; increments age and time_since_update.
void predict(Track& track, const KalmanModel& model);

/// delta_k = z - H x_pred, components (dx, dy, dw, dh).
Vec4 innovation(const Track& track, const Measurement& z,
                const KalmanModel& model);

/// Component-wise root mean square over the window.
/// Throws NumericalError on an empty window.
Vec4 residual_rmse(std::span<const Vec4> window);

Mat4 adapt_measurement_noise(const Vec4& delta_rmse,
                             const AdaptiveNoiseConfig& cfg);

/// Kalman update with the supplied R (Joseph form, then symmetrized).
/// Appends the innovation to the track's residual window (bounded by
/// window_len), increments hits, resets time_since_update, and clamps the
/// state's w/h to >= 1 px.
void update(Track& track, const Measurement& z, const Mat4& R,
            const KalmanModel& model, int window_len);

}  // namespace adugs::tracker
