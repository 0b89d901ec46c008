#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "adugs/features/anms.hpp"

namespace adugs::features {

struct TrackedFeature {
  Keypoint kp;
  int age = 0;  // frames tracked since extraction
};

struct FeatureSet {
  std::vector<TrackedFeature> active;
};

/// Simulated optical-flow model: each active feature reappears at its true
/// position plus Gaussian noise, or is lost with probability p_loss. Draws
/// are keyed by (stream, frame, feature id), so the noise a feature sees
/// never depends on which other features are being tracked.
struct PropagationModel {
  double sigma_track = 0.0;  // px
  double p_loss = 0.0;
  std::uint64_t stream = 0;
};

struct PropagateResult {
  std::vector<Keypoint> matched;  // ids preserved, positions updated
  int lost_count = 0;
};

PropagateResult propagate(
    const FeatureSet& features,
    std::span<const std::pair<int, Point2>> correspondence,  // id-sorted
    const PropagationModel& model, int frame_index);

struct RejectResult {
  std::vector<Keypoint> survivors;
  int rejected = 0;  // r
};

RejectResult reject_dynamic(std::span<const Keypoint> matched,
                            const masking::BinaryMask& mask);

/// Extraction budget restoring the set toward n_max: s tracked points came
/// through optical flow, r of them were rejected as dynamic.
inline int compensation_cap(int n_max, int s, int r) {
  return std::max(0, n_max - s + r);
}

/// Survivors stay; up to extraction_cap new points are selected from the
/// candidates outside the mask, at least d_min from every survivor.
FeatureSet replenish(std::span<const TrackedFeature> survivors,
                     std::span<const Keypoint> candidates,
                     const FeatureBudget& budget,
                     const masking::BinaryMask& mask, int extraction_cap);

/// Per-frame feature bookkeeping for the pipeline.
class FeatureManager {
 public:
  FeatureManager(FeatureBudget budget, PropagationModel model)
      : budget_(budget), model_(model) {}

  struct FeaturePair {
    int id = 0;
    Point2 prev;  // tracked position in the previous frame
    Point2 curr;
    bool dynamic_origin = false;
  };

  struct StepStats {
    int s = 0;          // matched through optical flow
    int r = 0;          // rejected inside the mask
    int survivors = 0;  // s - r
    int cap = 0;        // extraction budget this frame
    int added = 0;
    int lost = 0;
    int active = 0;
    std::vector<FeaturePair> pairs;  // survivor correspondences
  };

  StepStats step(std::span<const std::pair<int, Point2>> correspondence,
                 std::span<const Keypoint> candidates,
                 const masking::BinaryMask& mask, int frame_index,
                 bool compensation_enabled);

  const FeatureSet& features() const { return set_; }

 private:
  FeatureBudget budget_;
  PropagationModel model_;
  FeatureSet set_;
};

}  // namespace adugs::features
