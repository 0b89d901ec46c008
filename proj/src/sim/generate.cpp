#include <algorithm>
#include <cmath>

#include "adugs/core/format.hpp"
#include "adugs/core/rng.hpp"
#include "adugs/sim/scene.hpp"

namespace adugs::sim {

namespace {

constexpr int kSurfaceGrid = 3;  // per-object keypoints: 3x3

double q9(double v) { return quantize_g9(v); }

PathSpec quantize_path(PathSpec p) {
  p.speed = q9(p.speed);
  p.x0 = q9(p.x0);
  p.y0 = q9(p.y0);
  p.heading = q9(p.heading);
  p.radius = q9(p.radius);
  for (Point2& w : p.waypoints) {
    w.x = q9(w.x);
    w.y = q9(w.y);
  }
  return p;
}

// All reals pass through the 9-significant-digit file format once, so a
// generated scene is bit-identical to its saved-and-reloaded self.
SceneConfig quantize_config(SceneConfig c) {
  c.frame_rate = q9(c.frame_rate);
  c.px_per_meter = q9(c.px_per_meter);
  c.camera_path = quantize_path(c.camera_path);
  for (ObjectSpec& o : c.objects) {
    o.w_px = q9(o.w_px);
    o.h_px = q9(o.h_px);
    o.path = quantize_path(o.path);
  }
  c.detector_noise.sigma_center = q9(c.detector_noise.sigma_center);
  c.detector_noise.sigma_size = q9(c.detector_noise.sigma_size);
  c.detector_noise.p_miss = q9(c.detector_noise.p_miss);
  c.detector_noise.p_false = q9(c.detector_noise.p_false);
  c.feature_noise.sigma_track = q9(c.feature_noise.sigma_track);
  c.feature_noise.p_loss = q9(c.feature_noise.p_loss);
  c.occlusion_iou = q9(c.occlusion_iou);
  c.noise_burst.factor = q9(c.noise_burst.factor);
  return c;
}

bool box_in_view(const BoundingBox& b, const SceneConfig& c) {
  return b.right() > 0.0 && b.left() < c.viewport_w && b.bottom() > 0.0 &&
         b.top() < c.viewport_h;
}

bool point_in_view(const Point2& p, const SceneConfig& c) {
  return p.x >= 0.0 && p.x < c.viewport_w && p.y >= 0.0 && p.y < c.viewport_h;
}

}  // namespace

Point2 project_to_viewport(const PoseSE2& cam, const Point2& world,
                           const SceneConfig& cfg) {
  const Point2 rel = transform_point(pose_inverse(cam), world);
  return {rel.x * cfg.px_per_meter + 0.5 * cfg.viewport_w,
          rel.y * cfg.px_per_meter + 0.5 * cfg.viewport_h};
}

Point2 viewport_to_camera(const Point2& px, const SceneConfig& cfg) {
  return {(px.x - 0.5 * cfg.viewport_w) / cfg.px_per_meter,
          (px.y - 0.5 * cfg.viewport_h) / cfg.px_per_meter};
}

double silhouette_corner_radius(const BoundingBox& box) {
  return 0.25 * std::min(box.w, box.h);
}

masking::SegmentContext make_segment_context(const SceneConfig& cfg,
                                             const FrameRecord& frame) {
  masking::SegmentContext ctx;
  ctx.width = cfg.viewport_w;
  ctx.height = cfg.viewport_h;
  ctx.silhouettes.reserve(frame.gt_boxes.size());
  for (const GtBox& g : frame.gt_boxes) {
    ctx.silhouettes.push_back({g.box, silhouette_corner_radius(g.box)});
  }
  return ctx;
}

Scene generate(const SceneConfig& raw_config, std::uint64_t seed) {
  validate(raw_config);
  const SceneConfig config = quantize_config(raw_config);

  Scene scene;
  scene.config = config;
  scene.seed = seed;

  const std::uint64_t det_stream = stream_seed(seed, "detector_noise");
  const std::uint64_t fp_stream = stream_seed(seed, "false_positives");
  const std::uint64_t resp_stream = stream_seed(seed, "responses");

  const double dt = 1.0 / config.frame_rate;

  // camera ground truth
  std::vector<PoseSE2> cam(config.frames);
  for (int i = 0; i < config.frames; ++i) {
    PoseSE2 p = path_pose(config.camera_path, i * dt);
    cam[i] = {q9(p.x), q9(p.y), q9(p.theta)};
    scene.gt_trajectory.points.push_back({q9(i * dt), cam[i]});
  }

  // static landmarks over the swept view area
  double min_x = cam[0].x, max_x = cam[0].x, min_y = cam[0].y, max_y = cam[0].y;
  for (const PoseSE2& p : cam) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double half_w = 0.5 * config.viewport_w / config.px_per_meter + 0.5;
  const double half_h = 0.5 * config.viewport_h / config.px_per_meter + 0.5;
  StreamRng lm_rng(config.landmark_seed, "landmarks");
  std::vector<Point2> landmarks(config.landmark_count);
  for (Point2& lm : landmarks) {
    lm.x = lm_rng.uniform(min_x - half_w, max_x + half_w);
    lm.y = lm_rng.uniform(min_y - half_h, max_y + half_h);
  }

  auto response_of = [&](int id) {
    return q9(10.0 + 90.0 * uniform_at(resp_stream, static_cast<std::uint64_t>(id), 0, 0));
  };

  scene.frames.resize(config.frames);
  for (int i = 0; i < config.frames; ++i) {
    FrameRecord& fr = scene.frames[i];
    fr.index = i;
    fr.timestamp = q9(i * dt);
    fr.gt_camera_pose = cam[i];

    // objects alive and on screen
    std::vector<int> object_of_box;
    for (std::size_t oi = 0; oi < config.objects.size(); ++oi) {
      const ObjectSpec& o = config.objects[oi];
      if (i < o.spawn || i >= o.despawn) continue;
      const PoseSE2 wp = path_pose(o.path, i * dt);
      const Point2 center = project_to_viewport(cam[i], {wp.x, wp.y}, config);
      const BoundingBox box{q9(center.x), q9(center.y), o.w_px, o.h_px};
      if (!box_in_view(box, config)) continue;
      fr.gt_boxes.push_back({static_cast<int>(oi), box});
      object_of_box.push_back(static_cast<int>(oi));
    }

    // occlusion rule: boxes overlapping above tau drop the lower-z detection
    std::vector<char> occluded(fr.gt_boxes.size(), 0);
    for (std::size_t a = 0; a < fr.gt_boxes.size(); ++a) {
      for (std::size_t b = 0; b < fr.gt_boxes.size(); ++b) {
        if (a == b) continue;
        const int za = config.objects[object_of_box[a]].z_order;
        const int zb = config.objects[object_of_box[b]].z_order;
        if (za >= zb) continue;
        if (iou(fr.gt_boxes[a].box, fr.gt_boxes[b].box) > config.occlusion_iou) {
          occluded[a] = 1;
        }
      }
    }

    double sigma_c = config.detector_noise.sigma_center;
    double sigma_s = config.detector_noise.sigma_size;
    if (config.noise_burst.active() && i >= config.noise_burst.begin &&
        i < config.noise_burst.end) {
      sigma_c *= config.noise_burst.factor;
      sigma_s *= config.noise_burst.factor;
    }

    for (std::size_t b = 0; b < fr.gt_boxes.size(); ++b) {
      if (occluded[b]) continue;
      const auto obj = static_cast<std::uint64_t>(object_of_box[b]);
      const auto fi = static_cast<std::uint64_t>(i);
      if (bernoulli_at(det_stream, fi, obj, 0, config.detector_noise.p_miss)) {
        continue;
      }
      const BoundingBox& g = fr.gt_boxes[b].box;
      tracker::Measurement m;
      m.x = q9(g.cx + sigma_c * normal_at(det_stream, fi, obj, 1));
      m.y = q9(g.cy + sigma_c * normal_at(det_stream, fi, obj, 2));
      m.w = q9(std::max(1.0, g.w + sigma_s * normal_at(det_stream, fi, obj, 3)));
      m.h = q9(std::max(1.0, g.h + sigma_s * normal_at(det_stream, fi, obj, 4)));
      fr.detections.push_back(m);
    }
    {
      const auto fi = static_cast<std::uint64_t>(i);
      if (bernoulli_at(fp_stream, fi, 0, 0, config.detector_noise.p_false)) {
        tracker::Measurement m;
        m.x = q9(config.viewport_w * uniform_at(fp_stream, fi, 0, 1));
        m.y = q9(config.viewport_h * uniform_at(fp_stream, fi, 0, 2));
        m.w = q9(20.0 + 60.0 * uniform_at(fp_stream, fi, 0, 3));
        m.h = q9(20.0 + 60.0 * uniform_at(fp_stream, fi, 0, 4));
        fr.detections.push_back(m);
      }
    }

    // keypoint candidates: static landmarks first, then object surface points
    for (int li = 0; li < config.landmark_count; ++li) {
      const Point2 px = project_to_viewport(cam[i], landmarks[li], config);
      const Point2 qpx{q9(px.x), q9(px.y)};
      if (!point_in_view(qpx, config)) continue;
      fr.keypoint_candidates.push_back(
          {li, qpx, response_of(li), {false, li}});
    }
    for (std::size_t oi = 0; oi < config.objects.size(); ++oi) {
      const ObjectSpec& o = config.objects[oi];
      if (i < o.spawn || i >= o.despawn) continue;
      const PoseSE2 wp = path_pose(o.path, i * dt);
      for (int k = 0; k < kSurfaceGrid * kSurfaceGrid; ++k) {
        const double fx = (k % kSurfaceGrid - 1) * 0.3;
        const double fy = (k / kSurfaceGrid - 1) * 0.3;
        const Point2 world{wp.x + fx * o.w_px / config.px_per_meter,
                           wp.y + fy * o.h_px / config.px_per_meter};
        const Point2 px = project_to_viewport(cam[i], world, config);
        const Point2 qpx{q9(px.x), q9(px.y)};
        if (!point_in_view(qpx, config)) continue;
        const int id = config.landmark_count +
                       static_cast<int>(oi) * kSurfaceGrid * kSurfaceGrid + k;
        fr.keypoint_candidates.push_back(
            {id, qpx, response_of(id), {true, static_cast<int>(oi)}});
      }
    }

    fr.gt_correspondence.reserve(fr.keypoint_candidates.size());
    for (const features::Keypoint& kp : fr.keypoint_candidates) {
      fr.gt_correspondence.emplace_back(kp.id, kp.position);
    }
  }

  return scene;
}

}  // namespace adugs::sim
