#include "adugs/tracker/kalman.hpp"

#include <cmath>

#include "adugs/core/erf.hpp"
#include "adugs/core/error.hpp"

namespace adugs::tracker {

KalmanModel KalmanModel::standard() {
  KalmanModel m;
  m.F = Mat8::Identity();
  for (int i = 0; i < 4; ++i) m.F(i, i + 4) = 1.0;

  m.H = Mat48::Zero();
  for (int i = 0; i < 4; ++i) m.H(i, i) = 1.0;

  Vec8 q;
  q << 1, 1, 1, 1, 0.01, 0.01, 0.01, 0.01;
  m.Q = q.asDiagonal();

  Vec8 p0;
  p0 << 10, 10, 10, 10, 1000, 1000, 1000, 1000;
  m.P0 = p0.asDiagonal();

  m.R_init = 10.0 * Mat4::Identity();
  return m;
}

void predict(Track& track, const KalmanModel& model) {
  track.state = model.F * track.state;
  track.P = model.F * track.P * model.F.transpose() + model.Q;
  track.age += 1;
  track.time_since_update += 1;
}

Vec4 innovation(const Track& track, const Measurement& z,
                const KalmanModel& model) {
  return z.vec() - model.H * track.state;
}

Vec4 residual_rmse(std::span<const Vec4> window) {
  if (window.empty()) {
    throw NumericalError("residual_rmse: empty window");
  }
  Vec4 acc = Vec4::Zero();
  for (const Vec4& d : window) acc += d.cwiseProduct(d);
  return (acc / static_cast<double>(window.size())).cwiseSqrt();
}

Mat4 adapt_measurement_noise(const Vec4& delta_rmse,
                             const AdaptiveNoiseConfig& cfg) {
  Vec4 diag;
  for (int i = 0; i < 4; ++i) {
    diag(i) = std::max(cfg.beta * adugs::erf(cfg.lambda * delta_rmse(i)),
                       cfg.floor_eps);
  }
  return diag.asDiagonal();
}

void update(Track& track, const Measurement& z, const Mat4& R,
            const KalmanModel& model, int window_len) {
  const Vec4 delta = innovation(track, z, model);
  const Mat4 S = model.H * track.P * model.H.transpose() + R;
  const Eigen::LDLT<Mat4> ldlt(S);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw NumericalError("update: singular innovation covariance");
  }
  const Eigen::Matrix<double, 8, 4> K =
      ldlt.solve(model.H * track.P).transpose();

  track.state += K * delta;
  const Mat8 IKH = Mat8::Identity() - K * model.H;
  track.P = IKH * track.P * IKH.transpose() + K * R * K.transpose();
  track.P = 0.5 * (track.P + track.P.transpose());

  track.state(2) = std::max(track.state(2), 1.0);
  track.state(3) = std::max(track.state(3), 1.0);

  track.residual_window.push_back(delta);
  while (static_cast<int>(track.residual_window.size()) > window_len) {
    track.residual_window.pop_front();
  }
  track.hits += 1;
  track.time_since_update = 0;
}

}  // namespace adugs::tracker
