#include "adugs/sim/config.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "adugs/core/error.hpp"

namespace adugs::sim {

PathSpec PathSpec::line(double x0, double y0, double heading, double speed) {
  PathSpec p;
  p.kind = Kind::Line;
  p.x0 = x0;
  p.y0 = y0;
  p.heading = heading;
  p.speed = speed;
  return p;
}

PathSpec PathSpec::circle(double cx, double cy, double radius, double speed) {
  PathSpec p;
  p.kind = Kind::Circle;
  p.x0 = cx;
  p.y0 = cy;
  p.radius = radius;
  p.speed = speed;
  return p;
}

PoseSE2 path_pose(const PathSpec& path, double t) {
  switch (path.kind) {
    case PathSpec::Kind::Line: {
      const double d = path.speed * t;
      return {path.x0 + d * std::cos(path.heading),
              path.y0 + d * std::sin(path.heading), wrap_angle(path.heading)};
    }
    case PathSpec::Kind::Circle: {
      const double ang = path.speed * t / path.radius;
      return {path.x0 + path.radius * std::cos(ang),
              path.y0 + path.radius * std::sin(ang),
              wrap_angle(ang + 0.5 * std::numbers::pi)};
    }
    case PathSpec::Kind::Waypoints: {
      if (path.waypoints.empty()) return {};
      if (path.waypoints.size() == 1) {
        return {path.waypoints[0].x, path.waypoints[0].y, 0.0};
      }
      double remaining = path.speed * t;
      for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
        const Point2& a = path.waypoints[i];
        const Point2& b = path.waypoints[i + 1];
        const double len = distance(a, b);
        const double heading = std::atan2(b.y - a.y, b.x - a.x);
        if (remaining <= len || i + 2 == path.waypoints.size()) {
          const double s = len > 0.0 ? std::min(remaining, len) / len : 0.0;
          return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y),
                  wrap_angle(heading)};
        }
        remaining -= len;
      }
      return {};
    }
  }
  return {};
}

void validate(const SceneConfig& c) {
  auto prob = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ConfigError(std::string(name) + " must be in [0, 1]");
    }
  };
  if (c.viewport_w < 1 || c.viewport_h < 1) throw ConfigError("viewport must be positive");
  if (c.frames < 1) throw ConfigError("frames must be >= 1");
  if (!(c.frame_rate > 0.0)) throw ConfigError("frame_rate must be positive");
  if (!(c.px_per_meter > 0.0)) throw ConfigError("px_per_meter must be positive");
  if (c.landmark_count < 0) throw ConfigError("landmark count must be >= 0");
  prob(c.detector_noise.p_miss, "p_miss");
  prob(c.detector_noise.p_false, "p_false");
  prob(c.feature_noise.p_loss, "p_loss");
  if (!(c.occlusion_iou >= 0.0 && c.occlusion_iou < 1.0)) {
    throw ConfigError("occlusion_iou must be in [0, 1)");
  }
  auto check_path = [](const PathSpec& p) {
    if (p.kind == PathSpec::Kind::Circle && !(p.radius > 0.0)) {
      throw ConfigError("circle path radius must be positive");
    }
    if (p.kind == PathSpec::Kind::Waypoints && p.waypoints.empty()) {
      throw ConfigError("waypoint path needs at least one point");
    }
  };
  check_path(c.camera_path);
  for (const ObjectSpec& o : c.objects) {
    if (!(o.w_px > 0.0 && o.h_px > 0.0)) throw ConfigError("object size must be positive");
    if (o.spawn < 0 || o.despawn > c.frames || o.spawn >= o.despawn) {
      throw ConfigError("object spawn/despawn out of range");
    }
    check_path(o.path);
  }
  if (c.noise_burst.active()) {
    if (c.noise_burst.factor < 1.0) throw ConfigError("noise burst factor must be >= 1");
    if (c.noise_burst.begin < 0 || c.noise_burst.end > c.frames) {
      throw ConfigError("noise burst interval out of range");
    }
  }
}

SceneConfig preset_config(std::string_view name) {
  SceneConfig c;
  c.detector_noise = {1.0, 0.5, 0.05, 0.02};
  c.feature_noise = {0.3, 0.02};

  int count = 0;
  if (name == "none") {
    count = 0;
  } else if (name == "low") {
    count = 2;
  } else if (name == "mid") {
    count = 4;
  } else if (name == "high") {
    count = 8;
  } else {
    throw ConfigError("unknown preset: " + std::string(name));
  }

  constexpr double pi = std::numbers::pi;
  for (int i = 0; i < count; ++i) {
    ObjectSpec o;
    o.w_px = 90.0 + 10.0 * i;
    o.h_px = 70.0 + 8.0 * i;
    o.z_order = i;
    o.spawn = 0;
    o.despawn = c.frames;
    const double y = count > 1 ? -0.85 + 1.7 * i / (count - 1) : 0.0;
    const double speed = 0.22 + 0.03 * i;
    if (i % 4 == 3) {
      // a vertical mover for variety
      o.path = PathSpec::line(-1.6 + 0.8 * i / 2.0, -2.6, 0.5 * pi, 0.28);
    } else if (i % 2 == 0) {
      o.path = PathSpec::line(-2.6 - 0.15 * i, y, 0.0, speed);
    } else {
      o.path = PathSpec::line(2.6 + 0.15 * i, y, pi, speed);
    }
    c.objects.push_back(o);
  }
  return c;
}

SceneConfig scenario_occlusion_crossing(const SceneConfig& base,
                                        int occluded_frames) {
  if (occluded_frames < 1) throw ConfigError("occluded_frames must be >= 1");
  if (occluded_frames > base.frames) {
    throw ConfigError("occluded_frames larger than the sequence");
  }

  SceneConfig c = base;
  c.objects.clear();
  c.detector_noise.p_miss = 0.0;
  c.detector_noise.p_false = 0.0;
  // non-rotating camera keeps the image-space crossing geometry exact
  const double cam_speed =
      base.camera_path.kind == PathSpec::Kind::Line ? base.camera_path.speed : 0.15;
  c.camera_path = PathSpec::line(-0.9, 0.0, 0.0, cam_speed);

  const double w = 150.0, h = 110.0;
  const double tau = c.occlusion_iou;
  // IoU of two equal boxes at horizontal offset dx exceeds tau exactly when
  // |dx| < w (1 - tau) / (1 + tau)
  const double x_px = w * (1.0 - tau) / (1.0 + tau);
  const int k = occluded_frames;
  const double t_mid =
      (k % 2 == 1) ? std::floor(c.frames / 2.0) : std::floor(c.frames / 2.0) - 0.5;
  const double v_px = 2.0 * x_px / k;  // px per frame
  const double ppm = c.px_per_meter;
  const double dt = 1.0 / c.frame_rate;

  // occluder, stationary where the camera looks at mid-sequence
  const PoseSE2 cam_mid = path_pose(c.camera_path, t_mid * dt);
  ObjectSpec a;
  a.w_px = w;
  a.h_px = h;
  a.z_order = 2;
  a.spawn = 0;
  a.despawn = c.frames;
  a.path = PathSpec::line(cam_mid.x, 0.0, 0.0, 0.0);
  c.objects.push_back(a);

  // occluded object, crossing horizontally through the occluder
  ObjectSpec b;
  b.w_px = w;
  b.h_px = h;
  b.z_order = 1;
  const double v_world = v_px * c.frame_rate / ppm;  // m/s
  b.path = PathSpec::line(cam_mid.x - t_mid * v_px / ppm, 0.0, 0.0, v_world);
  // spawn only while its box stays inside the viewport
  const double cam_px_per_frame = cam_speed * dt * ppm;
  const double span = (0.5 * c.viewport_w + 0.5 * w - 1.0) / (v_px - cam_px_per_frame);
  b.spawn = std::max(0, static_cast<int>(std::ceil(t_mid - span)));
  b.despawn = std::min(c.frames, static_cast<int>(std::floor(t_mid + span)) + 1);
  c.objects.push_back(b);
  return c;
}

SceneConfig scenario_noise_burst(const SceneConfig& base, int begin, int end,
                                 double factor) {
  if (factor < 1.0) throw ConfigError("noise burst factor must be >= 1");
  if (begin < 0 || end > base.frames) {
    throw ConfigError("noise burst interval out of range");
  }
  if (factor == 1.0 || begin >= end) return base;
  SceneConfig c = base;
  c.noise_burst = {begin, end, factor};
  return c;
}

}  // namespace adugs::sim
