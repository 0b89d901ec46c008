#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "adugs/core/pose.hpp"
#include "adugs/features/anms.hpp"
#include "adugs/masking/segmenter.hpp"
#include "adugs/odometry/registration.hpp"
#include "adugs/sim/config.hpp"
#include "adugs/tracker/kalman.hpp"

namespace adugs::sim {

struct GtBox {
  int object = 0;
  BoundingBox box;

  bool operator==(const GtBox&) const = default;
};

struct FrameRecord {
  int index = 0;
  double timestamp = 0.0;
  PoseSE2 gt_camera_pose;
  std::vector<GtBox> gt_boxes;  // alive objects intersecting the viewport
  std::vector<tracker::Measurement> detections;
  std::vector<features::Keypoint> keypoint_candidates;
  // id -> true current position, sorted by id; covers every candidate id
  std::vector<std::pair<int, Point2>> gt_correspondence;

  bool operator==(const FrameRecord&) const = default;
};

struct Scene {
  SceneConfig config;
  std::uint64_t seed = 0;
  std::vector<FrameRecord> frames;
  odometry::Trajectory gt_trajectory;

  bool operator==(const Scene&) const = default;
};

/// World point through the camera into viewport pixels.
Point2 project_to_viewport(const PoseSE2& cam, const Point2& world,
                           const SceneConfig& cfg);

/// Viewport pixels to camera-frame meters.
Point2 viewport_to_camera(const Point2& px, const SceneConfig& cfg);

/// Silhouette rounding used for ground-truth object shapes.
double silhouette_corner_radius(const BoundingBox& box);

/// Segmentation context for one frame (ground-truth silhouettes).
masking::SegmentContext make_segment_context(const SceneConfig& cfg,
                                             const FrameRecord& frame);

/// Deterministic scene synthesis: identical (config, seed) pairs produce
/// identical scenes. Noise is drawn from independent streams per subsystem
/// so changing one stage's parameters never shifts another's draws.
Scene generate(const SceneConfig& config, std::uint64_t seed);

}  // namespace adugs::sim
