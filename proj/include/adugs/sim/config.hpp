#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "adugs/core/pose.hpp"

namespace adugs::sim {

/// Parametric motion: line, circle, or waypoint polyline at constant speed.
struct PathSpec {
  enum class Kind { Line, Circle, Waypoints };
  Kind kind = Kind::Line;
  double speed = 0.0;  // m/s
  double x0 = 0.0;     // line start / circle center
  double y0 = 0.0;
  double heading = 0.0;  // line direction, rad
  double radius = 1.0;   // circle only
  std::vector<Point2> waypoints;

  static PathSpec line(double x0, double y0, double heading, double speed);
  static PathSpec circle(double cx, double cy, double radius, double speed);

  bool operator==(const PathSpec&) const = default;
};

/// Pose along the path at time t (seconds). Lines face their heading,
/// circles face the tangent, polylines face the current segment.
PoseSE2 path_pose(const PathSpec& path, double t);

struct ObjectSpec {
  double w_px = 0.0;
  double h_px = 0.0;
  int z_order = 0;  // higher occludes lower
  int spawn = 0;    // alive for frames in [spawn, despawn)
  int despawn = 0;
  PathSpec path;

  bool operator==(const ObjectSpec&) const = default;
};

struct DetectorNoise {
  double sigma_center = 0.0;  // px
  double sigma_size = 0.0;    // px
  double p_miss = 0.0;
  double p_false = 0.0;

  bool operator==(const DetectorNoise&) const = default;
};

struct FeatureNoise {
  double sigma_track = 0.0;  // px
  double p_loss = 0.0;

  bool operator==(const FeatureNoise&) const = default;
};

/// Detector sigma multiplied by factor for frames in [begin, end).
struct NoiseBurst {
  int begin = 0;
  int end = 0;
  double factor = 1.0;

  bool active() const { return end > begin && factor != 1.0; }
  bool operator==(const NoiseBurst&) const = default;
};

struct SceneConfig {
  int viewport_w = 640;
  int viewport_h = 480;
  int frames = 240;
  double frame_rate = 20.0;   // Hz
  double px_per_meter = 100.0;
  PathSpec camera_path = PathSpec::line(-0.9, 0.0, 0.0, 0.15);
  int landmark_count = 350;
  std::uint64_t landmark_seed = 1234;
  std::vector<ObjectSpec> objects;
  DetectorNoise detector_noise;
  FeatureNoise feature_noise;
  double occlusion_iou = 0.25;  // IoU above which the lower-z box is occluded
  NoiseBurst noise_burst;

  bool operator==(const SceneConfig&) const = default;
};

/// Throws ConfigError when ranges or path specs are invalid.
void validate(const SceneConfig& config);

/// Desk-scale presets by dynamic level: none / low / mid / high
/// (0 / 2 / 4 / 8 objects of increasing size).
SceneConfig preset_config(std::string_view name);

/// Two objects whose paths cross so that the lower-z object's detections are
/// suppressed for exactly occluded_frames consecutive frames at mid-sequence.
/// Stochastic dropouts are zeroed so the suppression window is exact.
SceneConfig scenario_occlusion_crossing(const SceneConfig& base,
                                        int occluded_frames);

/// Detector sigma scaled by factor inside [begin, end). factor == 1 or an
/// empty interval returns base unchanged.
SceneConfig scenario_noise_burst(const SceneConfig& base, int begin, int end,
                                 double factor);

}  // namespace adugs::sim
