#include "adugs/sim/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "adugs/core/error.hpp"
#include "adugs/core/format.hpp"

namespace adugs::sim {

namespace {

std::string path_to_text(const PathSpec& p) {
  std::string s;
  switch (p.kind) {
    case PathSpec::Kind::Line:
      s = "line " + fmt_g9(p.x0) + " " + fmt_g9(p.y0) + " " +
          fmt_g9(p.heading) + " " + fmt_g9(p.speed);
      break;
    case PathSpec::Kind::Circle:
      s = "circle " + fmt_g9(p.x0) + " " + fmt_g9(p.y0) + " " +
          fmt_g9(p.radius) + " " + fmt_g9(p.speed);
      break;
    case PathSpec::Kind::Waypoints:
      s = "waypoints " + fmt_g9(p.speed) + " " +
          std::to_string(p.waypoints.size());
      for (const Point2& w : p.waypoints) {
        s += " " + fmt_g9(w.x) + " " + fmt_g9(w.y);
      }
      break;
  }
  return s;
}

struct TokenReader {
  std::vector<std::string> tokens;
  std::size_t pos = 1;  // tokens[0] is the line tag
  int line = 0;

  bool done() const { return pos >= tokens.size(); }

  const std::string& next(const char* what) {
    if (done()) {
      throw ParseError(std::string("missing field: ") + what, line);
    }
    return tokens[pos++];
  }
  double real(const char* what) {
    const std::string& t = next(what);
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end == nullptr || *end != '\0') {
      throw ParseError(std::string("bad number for ") + what + ": " + t, line);
    }
    return v;
  }
  long integer(const char* what) {
    const std::string& t = next(what);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') {
      throw ParseError(std::string("bad integer for ") + what + ": " + t, line);
    }
    return v;
  }
  std::uint64_t u64(const char* what) {
    const std::string& t = next(what);
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(t.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') {
      throw ParseError(std::string("bad integer for ") + what + ": " + t, line);
    }
    return v;
  }
  void finish() {
    if (!done()) throw ParseError("trailing fields: " + tokens[pos], line);
  }
};

PathSpec parse_path(TokenReader& r) {
  PathSpec p;
  const std::string& kind = r.next("path kind");
  if (kind == "line") {
    p.kind = PathSpec::Kind::Line;
    p.x0 = r.real("x0");
    p.y0 = r.real("y0");
    p.heading = r.real("heading");
    p.speed = r.real("speed");
  } else if (kind == "circle") {
    p.kind = PathSpec::Kind::Circle;
    p.x0 = r.real("cx");
    p.y0 = r.real("cy");
    p.radius = r.real("radius");
    p.speed = r.real("speed");
  } else if (kind == "waypoints") {
    p.kind = PathSpec::Kind::Waypoints;
    p.speed = r.real("speed");
    const long n = r.integer("waypoint count");
    for (long i = 0; i < n; ++i) {
      Point2 w;
      w.x = r.real("wx");
      w.y = r.real("wy");
      p.waypoints.push_back(w);
    }
  } else {
    throw ParseError("unknown path kind: " + kind, r.line);
  }
  return p;
}

}  // namespace

void save_scene(const Scene& scene, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("save_scene: cannot open " + path);
  const SceneConfig& c = scene.config;

  f << "ADUGS-SIM 1\n";
  f << "CFG viewport " << c.viewport_w << " " << c.viewport_h << "\n";
  f << "CFG frames " << c.frames << "\n";
  f << "CFG frame_rate " << fmt_g9(c.frame_rate) << "\n";
  f << "CFG px_per_meter " << fmt_g9(c.px_per_meter) << "\n";
  f << "CFG camera_path " << path_to_text(c.camera_path) << "\n";
  f << "CFG landmarks " << c.landmark_count << " " << c.landmark_seed << "\n";
  f << "CFG detector_noise " << fmt_g9(c.detector_noise.sigma_center) << " "
    << fmt_g9(c.detector_noise.sigma_size) << " "
    << fmt_g9(c.detector_noise.p_miss) << " "
    << fmt_g9(c.detector_noise.p_false) << "\n";
  f << "CFG feature_noise " << fmt_g9(c.feature_noise.sigma_track) << " "
    << fmt_g9(c.feature_noise.p_loss) << "\n";
  f << "CFG occlusion_iou " << fmt_g9(c.occlusion_iou) << "\n";
  if (c.noise_burst.active()) {
    f << "CFG noise_burst " << c.noise_burst.begin << " " << c.noise_burst.end
      << " " << fmt_g9(c.noise_burst.factor) << "\n";
  }
  for (const ObjectSpec& o : c.objects) {
    f << "CFG object " << fmt_g9(o.w_px) << " " << fmt_g9(o.h_px) << " "
      << o.z_order << " " << o.spawn << " " << o.despawn << " "
      << path_to_text(o.path) << "\n";
  }
  f << "CFG seed " << scene.seed << "\n";

  for (const FrameRecord& fr : scene.frames) {
    f << "F " << fr.index << " " << fmt_g9(fr.timestamp) << " "
      << fmt_g9(fr.gt_camera_pose.x) << " " << fmt_g9(fr.gt_camera_pose.y)
      << " " << fmt_g9(fr.gt_camera_pose.theta) << "\n";
    for (const GtBox& g : fr.gt_boxes) {
      f << "G " << g.object << " " << fmt_g9(g.box.cx) << " "
        << fmt_g9(g.box.cy) << " " << fmt_g9(g.box.w) << " "
        << fmt_g9(g.box.h) << "\n";
    }
    for (const tracker::Measurement& d : fr.detections) {
      f << "D " << fmt_g9(d.x) << " " << fmt_g9(d.y) << " " << fmt_g9(d.w)
        << " " << fmt_g9(d.h) << "\n";
    }
    for (const features::Keypoint& k : fr.keypoint_candidates) {
      f << "K " << k.id << " " << fmt_g9(k.position.x) << " "
        << fmt_g9(k.position.y) << " " << fmt_g9(k.response) << " "
        << k.origin.encode() << "\n";
    }
    for (const auto& [id, p] : fr.gt_correspondence) {
      f << "C " << id << " " << fmt_g9(p.x) << " " << fmt_g9(p.y) << "\n";
    }
  }
  if (!f) throw ConfigError("save_scene: write failed for " + path);
}

Scene load_scene(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("load_scene: cannot open " + path);

  Scene scene;
  SceneConfig& c = scene.config;
  c.objects.clear();

  std::string raw;
  int line_no = 0;

  if (!std::getline(f, raw)) throw ParseError("empty file", 1);
  line_no = 1;
  {
    std::istringstream ss(raw);
    std::string magic;
    int version = -1;
    ss >> magic >> version;
    if (magic != "ADUGS-SIM") throw ParseError("not a scene file", 1);
    if (version != 1) {
      throw VersionError("unsupported scene version " + std::to_string(version));
    }
  }

  bool have_frames = false, have_seed = false;
  int frame_count = -1;
  FrameRecord* cur = nullptr;

  while (std::getline(f, raw)) {
    ++line_no;
    if (raw.empty()) continue;
    TokenReader r;
    r.line = line_no;
    {
      std::istringstream ss(raw);
      std::string tok;
      while (ss >> tok) r.tokens.push_back(tok);
    }
    if (r.tokens.empty()) continue;
    const std::string& tag = r.tokens[0];

    if (tag == "CFG") {
      if (cur != nullptr) throw ParseError("CFG after frame data", line_no);
      const std::string& key = r.next("config key");
      if (key == "viewport") {
        c.viewport_w = static_cast<int>(r.integer("width"));
        c.viewport_h = static_cast<int>(r.integer("height"));
      } else if (key == "frames") {
        frame_count = static_cast<int>(r.integer("frames"));
        c.frames = frame_count;
        have_frames = true;
      } else if (key == "frame_rate") {
        c.frame_rate = r.real("frame_rate");
      } else if (key == "px_per_meter") {
        c.px_per_meter = r.real("px_per_meter");
      } else if (key == "camera_path") {
        c.camera_path = parse_path(r);
      } else if (key == "landmarks") {
        c.landmark_count = static_cast<int>(r.integer("count"));
        c.landmark_seed = r.u64("seed");
      } else if (key == "detector_noise") {
        c.detector_noise.sigma_center = r.real("sigma_center");
        c.detector_noise.sigma_size = r.real("sigma_size");
        c.detector_noise.p_miss = r.real("p_miss");
        c.detector_noise.p_false = r.real("p_false");
      } else if (key == "feature_noise") {
        c.feature_noise.sigma_track = r.real("sigma_track");
        c.feature_noise.p_loss = r.real("p_loss");
      } else if (key == "occlusion_iou") {
        c.occlusion_iou = r.real("occlusion_iou");
      } else if (key == "noise_burst") {
        c.noise_burst.begin = static_cast<int>(r.integer("begin"));
        c.noise_burst.end = static_cast<int>(r.integer("end"));
        c.noise_burst.factor = r.real("factor");
      } else if (key == "object") {
        ObjectSpec o;
        o.w_px = r.real("w");
        o.h_px = r.real("h");
        o.z_order = static_cast<int>(r.integer("z"));
        o.spawn = static_cast<int>(r.integer("spawn"));
        o.despawn = static_cast<int>(r.integer("despawn"));
        o.path = parse_path(r);
        c.objects.push_back(o);
      } else if (key == "seed") {
        scene.seed = r.u64("seed");
        have_seed = true;
      } else {
        throw ParseError("unknown config key: " + key, line_no);
      }
      r.finish();
    } else if (tag == "F") {
      if (!have_frames || !have_seed) {
        throw ParseError("frame data before required config", line_no);
      }
      FrameRecord fr;
      fr.index = static_cast<int>(r.integer("frame index"));
      fr.timestamp = r.real("timestamp");
      fr.gt_camera_pose.x = r.real("cam_x");
      fr.gt_camera_pose.y = r.real("cam_y");
      fr.gt_camera_pose.theta = r.real("cam_theta");
      r.finish();
      if (fr.index != static_cast<int>(scene.frames.size())) {
        throw ParseError("frame index out of order", line_no);
      }
      scene.frames.push_back(std::move(fr));
      cur = &scene.frames.back();
      scene.gt_trajectory.points.push_back(
          {cur->timestamp, cur->gt_camera_pose});
    } else if (tag == "G" || tag == "D" || tag == "K" || tag == "C") {
      if (cur == nullptr) throw ParseError("record before first frame", line_no);
      if (tag == "G") {
        GtBox g;
        g.object = static_cast<int>(r.integer("object"));
        g.box.cx = r.real("cx");
        g.box.cy = r.real("cy");
        g.box.w = r.real("w");
        g.box.h = r.real("h");
        cur->gt_boxes.push_back(g);
      } else if (tag == "D") {
        tracker::Measurement m;
        m.x = r.real("cx");
        m.y = r.real("cy");
        m.w = r.real("w");
        m.h = r.real("h");
        cur->detections.push_back(m);
      } else if (tag == "K") {
        features::Keypoint k;
        k.id = static_cast<int>(r.integer("id"));
        k.position.x = r.real("x");
        k.position.y = r.real("y");
        k.response = r.real("response");
        k.origin = features::KeypointOrigin::decode(
            static_cast<int>(r.integer("origin")));
        cur->keypoint_candidates.push_back(k);
      } else {
        const int id = static_cast<int>(r.integer("id"));
        Point2 p;
        p.x = r.real("x");
        p.y = r.real("y");
        cur->gt_correspondence.emplace_back(id, p);
      }
      r.finish();
    } else {
      throw ParseError("unknown record tag: " + tag, line_no);
    }
  }

  if (!have_frames || !have_seed) {
    throw ParseError("missing required config", line_no + 1);
  }
  if (static_cast<int>(scene.frames.size()) != frame_count) {
    throw ParseError("unexpected end of file: expected " +
                         std::to_string(frame_count) + " frames, got " +
                         std::to_string(scene.frames.size()),
                     line_no + 1);
  }
  return scene;
}

}  // namespace adugs::sim
