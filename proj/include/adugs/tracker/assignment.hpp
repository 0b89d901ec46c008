#pragma once

#include <span>
#include <utility>
#include <vector>

#include "adugs/core/types.hpp"
#include "adugs/tracker/kalman.hpp"

namespace adugs::tracker {

/// Minimum-cost complete assignment on a square cost matrix
/// (shortest augmenting path with potentials, O(n^3)).
/// Returns row -> column.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost);

struct Association {
  std::vector<std::pair<int, int>> matches;  // (track index, detection index)
  std::vector<int> unmatched_tracks;
  std::vector<int> unmatched_detections;
};

/// Hungarian association on cost 1 - IoU. Pairs with IoU below gate_iou are
/// given a large cost and filtered from the optimal assignment afterwards,
/// so they can never appear as matches.
Association associate(std::span<const BoundingBox> predicted,
                      std::span<const Measurement> detections,
                      double gate_iou);

}  // namespace adugs::tracker
