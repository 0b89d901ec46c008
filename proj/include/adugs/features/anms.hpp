#pragma once

#include <span>
#include <vector>

#include "adugs/core/types.hpp"
#include "adugs/masking/mask.hpp"

namespace adugs::features {

/// Where a simulated keypoint came from. Ground truth; the pipeline never
/// branches on it, only evaluation and diagnostics read it.
struct KeypointOrigin {
  bool dynamic = false;
  int index = 0;  // landmark id when static, object index when dynamic

  /// Signed file encoding: static -> index, dynamic -> -1-index.
  int encode() const { return dynamic ? -1 - index : index; }
  static KeypointOrigin decode(int v) {
    return v >= 0 ? KeypointOrigin{false, v} : KeypointOrigin{true, -1 - v};
  }
  bool operator==(const KeypointOrigin&) const = default;
};

struct Keypoint {
  int id = 0;
  Point2 position;
  double response = 0.0;
  KeypointOrigin origin;

  bool operator==(const Keypoint&) const = default;
};

struct FeatureBudget {
  int n_max = 150;
  double d_min = 20.0;  // px
};

/// Suppression radius per candidate: distance to the nearest strictly
/// stronger candidate, +infinity when none exists.
std::vector<double> suppression_radii(std::span<const Keypoint> candidates);

/// Candidates inside exclude_mask are discarded; the rest are ranked by
/// (radius desc, response desc, x asc, y asc, id asc), truncated to n_max,
/// then greedily thinned so every kept point is at least d_min from every
/// other kept point and from every anchor. Anchors constrain spacing but are
/// not returned and do not count against n_max.
std::vector<Keypoint> anms_select(std::span<const Keypoint> candidates,
                                  const FeatureBudget& budget,
                                  const masking::BinaryMask& exclude_mask,
                                  std::span<const Point2> anchors = {});

}  // namespace adugs::features
