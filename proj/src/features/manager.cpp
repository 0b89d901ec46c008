#include "adugs/features/manager.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "adugs/core/rng.hpp"

namespace adugs::features {

PropagateResult propagate(
    const FeatureSet& features,
    std::span<const std::pair<int, Point2>> correspondence,
    const PropagationModel& model, int frame_index) {
  PropagateResult out;
  const auto frame = static_cast<std::uint64_t>(frame_index);
  for (const TrackedFeature& f : features.active) {
    const auto it = std::lower_bound(
        correspondence.begin(), correspondence.end(), f.kp.id,
        [](const auto& entry, int id) { return entry.first < id; });
    if (it == correspondence.end() || it->first != f.kp.id) {
      out.lost_count += 1;  // left the view or source disappeared
      continue;
    }
    const auto id = static_cast<std::uint64_t>(f.kp.id);
    if (bernoulli_at(model.stream, frame, id, 0, model.p_loss)) {
      out.lost_count += 1;
      continue;
    }
    Keypoint kp = f.kp;
    kp.position.x = it->second.x + model.sigma_track * normal_at(model.stream, frame, id, 1);
    kp.position.y = it->second.y + model.sigma_track * normal_at(model.stream, frame, id, 2);
    out.matched.push_back(kp);
  }
  return out;
}

RejectResult reject_dynamic(std::span<const Keypoint> matched,
                            const masking::BinaryMask& mask) {
  RejectResult out;
  for (const Keypoint& k : matched) {
    if (masking::contains(mask, k.position)) {
      out.rejected += 1;
    } else {
      out.survivors.push_back(k);
    }
  }
  return out;
}

FeatureSet replenish(std::span<const TrackedFeature> survivors,
                     std::span<const Keypoint> candidates,
                     const FeatureBudget& budget,
                     const masking::BinaryMask& mask, int extraction_cap) {
  FeatureSet out;
  out.active.assign(survivors.begin(), survivors.end());

  std::vector<Point2> anchors;
  std::unordered_set<int> held_ids;
  anchors.reserve(survivors.size());
  for (const TrackedFeature& f : survivors) {
    anchors.push_back(f.kp.position);
    held_ids.insert(f.kp.id);
  }

  std::vector<Keypoint> pool;
  pool.reserve(candidates.size());
  for (const Keypoint& k : candidates) {
    if (!held_ids.contains(k.id)) pool.push_back(k);
  }

  FeatureBudget cap_budget = budget;
  cap_budget.n_max = std::min(extraction_cap,
                              budget.n_max - static_cast<int>(survivors.size()));
  if (cap_budget.n_max > 0) {
    for (const Keypoint& k : anms_select(pool, cap_budget, mask, anchors)) {
      out.active.push_back({k, 0});
    }
  }
  return out;
}

FeatureManager::StepStats FeatureManager::step(
    std::span<const std::pair<int, Point2>> correspondence,
    std::span<const Keypoint> candidates, const masking::BinaryMask& mask,
    int frame_index, bool compensation_enabled) {
  StepStats stats;

  std::unordered_map<int, Point2> prev_pos;
  prev_pos.reserve(set_.active.size());
  std::unordered_map<int, int> ages;
  for (const TrackedFeature& f : set_.active) {
    prev_pos[f.kp.id] = f.kp.position;
    ages[f.kp.id] = f.age;
  }

  const PropagateResult prop =
      propagate(set_, correspondence, model_, frame_index);
  stats.s = static_cast<int>(prop.matched.size());
  stats.lost = prop.lost_count;

  const RejectResult rej = reject_dynamic(prop.matched, mask);
  stats.r = rej.rejected;
  stats.survivors = static_cast<int>(rej.survivors.size());

  stats.pairs.reserve(rej.survivors.size());
  std::vector<TrackedFeature> kept;
  kept.reserve(rej.survivors.size());
  for (const Keypoint& k : rej.survivors) {
    stats.pairs.push_back(
        {k.id, prev_pos.at(k.id), k.position, k.origin.dynamic});
    kept.push_back({k, ages.at(k.id) + 1});
  }

  stats.cap = compensation_enabled
                  ? compensation_cap(budget_.n_max, stats.s, stats.r)
                  : std::max(0, budget_.n_max - stats.s);
  set_ = replenish(kept, candidates, budget_, mask, stats.cap);
  stats.added = static_cast<int>(set_.active.size()) - stats.survivors;
  stats.active = static_cast<int>(set_.active.size());
  return stats;
}

}  // namespace adugs::features
