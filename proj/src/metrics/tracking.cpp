#include "adugs/metrics/tracking.hpp"

#include <algorithm>
#include <map>

namespace adugs::metrics {

namespace {

constexpr double kMatchIou = 0.3;

// greedy unique matching by descending IoU
std::map<int, int> match_frame(const std::vector<tracker::TrackSnapshot>& out,
                               const std::vector<sim::GtBox>& gt) {
  struct Cand {
    double overlap;
    int track_idx;
    int gt_idx;
  };
  std::vector<Cand> cands;
  for (std::size_t ti = 0; ti < out.size(); ++ti) {
    for (std::size_t gi = 0; gi < gt.size(); ++gi) {
      const double o = iou(out[ti].box, gt[gi].box);
      if (o >= kMatchIou) {
        cands.push_back({o, static_cast<int>(ti), static_cast<int>(gi)});
      }
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.overlap != b.overlap) return a.overlap > b.overlap;
    if (a.gt_idx != b.gt_idx) return a.gt_idx < b.gt_idx;
    return a.track_idx < b.track_idx;
  });
  std::vector<char> track_used(out.size(), 0), gt_used(gt.size(), 0);
  std::map<int, int> object_to_track;  // object id -> track id
  for (const Cand& c : cands) {
    if (track_used[c.track_idx] || gt_used[c.gt_idx]) continue;
    track_used[c.track_idx] = 1;
    gt_used[c.gt_idx] = 1;
    object_to_track[gt[c.gt_idx].object] = out[c.track_idx].id;
  }
  return object_to_track;
}

}  // namespace

TrackingReport tracking_report(
    std::span<const std::vector<tracker::TrackSnapshot>> outputs,
    const sim::Scene& scene) {
  TrackingReport rep;
  const std::size_t n_frames =
      std::min(outputs.size(), scene.frames.size());

  std::map<int, int> last_matched_id;             // object -> last track id
  std::map<int, std::vector<int>> matched_by_frame;  // object -> id or -1
  double iou_sum = 0.0;
  int gt_object_frames = 0;

  for (std::size_t f = 0; f < n_frames; ++f) {
    const auto& gt = scene.frames[f].gt_boxes;
    const auto object_to_track = match_frame(outputs[f], gt);

    for (const sim::GtBox& g : gt) {
      ++gt_object_frames;
      auto& per_frame = matched_by_frame[g.object];
      while (per_frame.size() < f) per_frame.push_back(-1);
      const auto it = object_to_track.find(g.object);
      if (it == object_to_track.end()) {
        ++rep.miss_frames;
        per_frame.push_back(-1);
        continue;
      }
      per_frame.push_back(it->second);
      // find the matched snapshot's IoU for the mean
      for (const tracker::TrackSnapshot& s : outputs[f]) {
        if (s.id == it->second) {
          iou_sum += iou(s.box, g.box);
          break;
        }
      }
      auto& last = last_matched_id[g.object];
      if (last != 0 && last != it->second) ++rep.id_switches;
      last = it->second;
    }
  }
  rep.mean_iou_vs_gt = gt_object_frames > 0 ? iou_sum / gt_object_frames : 0.0;

  // occlusion events recomputed from the scene's own rule
  for (std::size_t oi = 0; oi < scene.config.objects.size(); ++oi) {
    std::vector<int> suppressed_frames;
    for (std::size_t f = 0; f < scene.frames.size(); ++f) {
      const auto& boxes = scene.frames[f].gt_boxes;
      const sim::GtBox* self = nullptr;
      for (const sim::GtBox& g : boxes) {
        if (g.object == static_cast<int>(oi)) self = &g;
      }
      if (self == nullptr) continue;
      bool occ = false;
      for (const sim::GtBox& g : boxes) {
        if (g.object == self->object) continue;
        const int zg = scene.config.objects[g.object].z_order;
        const int zs = scene.config.objects[oi].z_order;
        if (zg > zs && iou(g.box, self->box) > scene.config.occlusion_iou) {
          occ = true;
        }
      }
      if (occ) suppressed_frames.push_back(static_cast<int>(f));
    }
    // group consecutive suppressed frames into events
    for (std::size_t i = 0; i < suppressed_frames.size();) {
      std::size_t j = i;
      while (j + 1 < suppressed_frames.size() &&
             suppressed_frames[j + 1] == suppressed_frames[j] + 1) {
        ++j;
      }
      OcclusionEvent ev;
      ev.object = static_cast<int>(oi);
      ev.first_frame = suppressed_frames[i];
      ev.last_frame = suppressed_frames[j];

      const auto it = matched_by_frame.find(static_cast<int>(oi));
      int before = -1, after = -1;
      if (it != matched_by_frame.end()) {
        const std::vector<int>& ids = it->second;
        for (int f = ev.first_frame - 1; f >= 0; --f) {
          if (f < static_cast<int>(ids.size()) && ids[f] != -1) {
            before = ids[f];
            break;
          }
        }
        for (int f = ev.last_frame + 1; f < static_cast<int>(ids.size()); ++f) {
          if (ids[f] != -1) {
            after = ids[f];
            break;
          }
        }
      }
      ev.survived = before != -1 && before == after;
      rep.occlusion_events.push_back(ev);
      i = j + 1;
    }
  }
  return rep;
}

}  // namespace adugs::metrics
