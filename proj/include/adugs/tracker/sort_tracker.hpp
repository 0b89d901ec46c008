#pragma once

#include <span>
#include <utility>
#include <vector>

#include "adugs/tracker/assignment.hpp"
#include "adugs/tracker/kalman.hpp"

namespace adugs::tracker {

struct LifecycleConfig {
  double gate_iou = 0.3;
  int max_age = 10;   // coasting frames a confirmed track survives
  int min_hits = 3;   // hits needed to confirm
};

struct TrackerConfig {
  KalmanModel model = KalmanModel::standard();
  AdaptiveNoiseConfig noise;
  LifecycleConfig lifecycle;
  bool adaptive_enabled = true;
  // Per-track residual windows by default; a single shared window otherwise.
  bool per_track_window = true;
};

struct TrackSnapshot {
  int id = 0;
  BoundingBox box;
  TrackStatus status = TrackStatus::Tentative;
  bool matched = false;
};

/// Enhanced SORT: per-frame predict, IoU-gated Hungarian association,
/// residual-adaptive R updates, and coasting through detection dropouts.
/// Single-writer; one instance per detection stream.
class SortTracker {
 public:
  explicit SortTracker(TrackerConfig cfg = {});

  /// Processes one frame of detections, returns all live tracks.
  std::vector<TrackSnapshot> step(std::span<const Measurement> detections);

  /// Boxes prompting segmentation: confirmed tracks (posterior box) and
  /// coasting tracks (predicted box). Tentative tracks are excluded.
  std::vector<std::pair<int, BoundingBox>> prompt_boxes() const;

  const std::vector<Track>& tracks() const { return tracks_; }

  // diagnostics of the most recent step
  int last_matched_count() const { return last_matched_; }
  const Vec4& last_mean_r_diag() const { return last_mean_r_diag_; }

 private:
  Mat4 noise_for(const Track& track) const;

  TrackerConfig cfg_;
  std::vector<Track> tracks_;
  std::deque<Vec4> shared_window_;
  int next_id_ = 1;
  int last_matched_ = 0;
  Vec4 last_mean_r_diag_ = Vec4::Zero();
};

}  // namespace adugs::tracker
