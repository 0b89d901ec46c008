#include "adugs/tracker/sort_tracker.hpp"

#include <algorithm>

namespace adugs::tracker {

SortTracker::SortTracker(TrackerConfig cfg) : cfg_(std::move(cfg)) {}

Mat4 SortTracker::noise_for(const Track& track) const {
  if (!cfg_.adaptive_enabled) return cfg_.model.R_init;
  const std::deque<Vec4>& window =
      cfg_.per_track_window ? track.residual_window : shared_window_;
  if (static_cast<int>(window.size()) < cfg_.noise.min_samples) {
    return cfg_.model.R_init;
  }
  const std::vector<Vec4> snap(window.begin(), window.end());
  return adapt_measurement_noise(residual_rmse(snap), cfg_.noise);
}

std::vector<TrackSnapshot> SortTracker::step(
    std::span<const Measurement> detections) {
  for (Track& t : tracks_) predict(t, cfg_.model);

  std::vector<BoundingBox> predicted;
  predicted.reserve(tracks_.size());
  for (const Track& t : tracks_) predicted.push_back(t.box());

  const Association assoc =
      associate(predicted, detections, cfg_.lifecycle.gate_iou);

  last_matched_ = static_cast<int>(assoc.matches.size());
  last_mean_r_diag_ = Vec4::Zero();
  std::vector<char> matched_flag(tracks_.size(), 0);
  for (const auto& [ti, di] : assoc.matches) {
    Track& t = tracks_[ti];
    const Mat4 R = noise_for(t);
    last_mean_r_diag_ += R.diagonal();
    update(t, detections[di], R, cfg_.model, cfg_.noise.window_len);
    if (!cfg_.per_track_window) {
      shared_window_.push_back(t.residual_window.back());
      while (static_cast<int>(shared_window_.size()) > cfg_.noise.window_len) {
        shared_window_.pop_front();
      }
    }
    matched_flag[ti] = 1;
    if (t.status == TrackStatus::Coasting) t.status = TrackStatus::Confirmed;
    if (t.status == TrackStatus::Tentative && t.hits >= cfg_.lifecycle.min_hits) {
      t.status = TrackStatus::Confirmed;
    }
  }
  if (last_matched_ > 0) last_mean_r_diag_ /= last_matched_;

  for (const int ti : assoc.unmatched_tracks) {
    Track& t = tracks_[ti];
    if (t.status == TrackStatus::Tentative) {
      t.status = TrackStatus::Deleted;
    } else {
      t.status = t.time_since_update > cfg_.lifecycle.max_age
                     ? TrackStatus::Deleted
                     : TrackStatus::Coasting;
    }
  }

  for (const int di : assoc.unmatched_detections) {
    Track t;
    t.id = next_id_++;
    t.state.head<4>() = detections[di].vec();
    t.state(2) = std::max(t.state(2), 1.0);
    t.state(3) = std::max(t.state(3), 1.0);
    t.P = cfg_.model.P0;
    t.status = t.hits >= cfg_.lifecycle.min_hits ? TrackStatus::Confirmed
                                                 : TrackStatus::Tentative;
    tracks_.push_back(std::move(t));
  }

  std::vector<TrackSnapshot> out;
  out.reserve(tracks_.size());
  for (std::size_t i = 0; i < tracks_.size(); ++i) {
    const Track& t = tracks_[i];
    if (t.status == TrackStatus::Deleted) continue;
    out.push_back({t.id, t.box(), t.status,
                   i < matched_flag.size() && matched_flag[i] != 0});
  }

  std::erase_if(tracks_, [](const Track& t) {
    return t.status == TrackStatus::Deleted;
  });
  return out;
}

std::vector<std::pair<int, BoundingBox>> SortTracker::prompt_boxes() const {
  std::vector<std::pair<int, BoundingBox>> out;
  for (const Track& t : tracks_) {
    if (t.status == TrackStatus::Confirmed || t.status == TrackStatus::Coasting) {
      out.emplace_back(t.id, t.box());
    }
  }
  return out;
}

}  // namespace adugs::tracker
