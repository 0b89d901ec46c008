#pragma once

#include <span>
#include <vector>

#include "adugs/sim/scene.hpp"
#include "adugs/tracker/sort_tracker.hpp"

namespace adugs::metrics {

struct OcclusionEvent {
  int object = 0;
  int first_frame = 0;  // inclusive
  int last_frame = 0;   // inclusive
  bool survived = false;  // same matched track id before and after
};

struct TrackingReport {
  double mean_iou_vs_gt = 0.0;  // over gt object-frames, 0 when unmatched
  int id_switches = 0;
  int miss_frames = 0;  // gt object-frames with no matched output
  std::vector<OcclusionEvent> occlusion_events;

  bool all_occlusions_survived() const {
    for (const OcclusionEvent& e : occlusion_events) {
      if (!e.survived) return false;
    }
    return true;
  }
};

/// Greedy best-IoU matching (threshold 0.3) of per-frame tracker output to
/// ground-truth boxes. Occlusion events are recovered from the scene's
/// occlusion rule, not stored metadata.
TrackingReport tracking_report(
    std::span<const std::vector<tracker::TrackSnapshot>> outputs,
    const sim::Scene& scene);

}  // namespace adugs::metrics
