#include "adugs/features/anms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace adugs::features {

std::vector<double> suppression_radii(std::span<const Keypoint> candidates) {
  const std::size_t n = candidates.size();
  std::vector<double> radii(n, std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (candidates[j].response > candidates[i].response) {
        radii[i] = std::min(
            radii[i], distance(candidates[i].position, candidates[j].position));
      }
    }
  }
  return radii;
}

std::vector<Keypoint> anms_select(std::span<const Keypoint> candidates,
                                  const FeatureBudget& budget,
                                  const masking::BinaryMask& exclude_mask,
                                  std::span<const Point2> anchors) {
  std::vector<Keypoint> pool;
  pool.reserve(candidates.size());
  for (const Keypoint& k : candidates) {
    if (!masking::contains(exclude_mask, k.position)) pool.push_back(k);
  }

  const std::vector<double> radii = suppression_radii(pool);
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (radii[a] != radii[b]) return radii[a] > radii[b];
    if (pool[a].response != pool[b].response)
      return pool[a].response > pool[b].response;
    if (pool[a].position.x != pool[b].position.x)
      return pool[a].position.x < pool[b].position.x;
    if (pool[a].position.y != pool[b].position.y)
      return pool[a].position.y < pool[b].position.y;
    return pool[a].id < pool[b].id;
  });
  if (static_cast<int>(order.size()) > budget.n_max) {
    order.resize(budget.n_max);
  }

  std::vector<Keypoint> kept;
  std::vector<Point2> kept_pos(anchors.begin(), anchors.end());
  for (const std::size_t idx : order) {
    const Point2& p = pool[idx].position;
    const bool ok = std::all_of(
        kept_pos.begin(), kept_pos.end(),
        [&](const Point2& q) { return distance(p, q) >= budget.d_min; });
    if (ok) {
      kept.push_back(pool[idx]);
      kept_pos.push_back(p);
    }
  }
  return kept;
}

}  // namespace adugs::features
