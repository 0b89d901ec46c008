#include "adugs/harness/config.hpp"

#include <cstdlib>
#include <fstream>

#include "adugs/core/error.hpp"

namespace adugs::harness {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double to_real(const std::string& v, int line) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == nullptr || *end != '\0') throw ParseError("bad number: " + v, line);
  return x;
}

int to_int(const std::string& v, int line) {
  char* end = nullptr;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (end == nullptr || *end != '\0') throw ParseError("bad integer: " + v, line);
  return static_cast<int>(x);
}

bool to_bool(const std::string& v, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ParseError("bad boolean: " + v, line);
}

SegmenterKind to_segmenter(const std::string& v, int line) {
  if (v == "oracle") return SegmenterKind::Oracle;
  if (v == "boxfill") return SegmenterKind::BoxFill;
  if (v == "noisy-oracle") return SegmenterKind::NoisyOracle;
  if (v == "noisy-boxfill") return SegmenterKind::NoisyBoxFill;
  throw ParseError("unknown segmenter: " + v, line);
}

}  // namespace

PipelineConfig load_pipeline_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config: " + path);

  PipelineConfig cfg;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(f, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("malformed section header", line_no);
      section = line.substr(1, line.size() - 2);
      if (section != "tracker" && section != "mask" && section != "features" &&
          section != "odometry" && section != "pipeline") {
        throw ParseError("unknown section: " + section, line_no);
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (section.empty()) throw ParseError("key outside any section", line_no);

    if (section == "tracker") {
      if (key == "lambda") cfg.tracker.noise.lambda = to_real(val, line_no);
      else if (key == "beta") cfg.tracker.noise.beta = to_real(val, line_no);
      else if (key == "window") cfg.tracker.noise.window_len = to_int(val, line_no);
      else if (key == "floor_eps") cfg.tracker.noise.floor_eps = to_real(val, line_no);
      else if (key == "min_samples") cfg.tracker.noise.min_samples = to_int(val, line_no);
      else if (key == "r_init") {
        cfg.tracker.model.R_init = to_real(val, line_no) * tracker::Mat4::Identity();
      } else if (key == "gate_iou") cfg.tracker.lifecycle.gate_iou = to_real(val, line_no);
      else if (key == "max_age") cfg.tracker.lifecycle.max_age = to_int(val, line_no);
      else if (key == "min_hits") cfg.tracker.lifecycle.min_hits = to_int(val, line_no);
      else if (key == "per_track_window") cfg.tracker.per_track_window = to_bool(val, line_no);
      else throw ParseError("unknown tracker key: " + key, line_no);
    } else if (section == "mask") {
      if (key == "segmenter") cfg.mask.segmenter = to_segmenter(val, line_no);
      else if (key == "r_erode") cfg.mask.r_erode = to_int(val, line_no);
      else if (key == "r_dilate") cfg.mask.r_dilate = to_int(val, line_no);
      else if (key == "noise_flip_prob") cfg.mask.noise_flip_prob = to_real(val, line_no);
      else if (key == "noise_speckles") cfg.mask.noise_speckles = to_int(val, line_no);
      else if (key == "dump_pbm") cfg.mask.dump_pbm = to_bool(val, line_no);
      else throw ParseError("unknown mask key: " + key, line_no);
    } else if (section == "features") {
      if (key == "n_max") cfg.features.n_max = to_int(val, line_no);
      else if (key == "d_min") cfg.features.d_min = to_real(val, line_no);
      else throw ParseError("unknown features key: " + key, line_no);
    } else if (section == "odometry") {
      if (key == "trimmed") cfg.odometry_trimmed = to_bool(val, line_no);
      else throw ParseError("unknown odometry key: " + key, line_no);
    } else {  // pipeline
      if (key == "epsilon") cfg.cr_epsilon = to_real(val, line_no);
      else if (key == "sort") cfg.sort_enabled = to_bool(val, line_no);
      else if (key == "mask") cfg.mask_enabled = to_bool(val, line_no);
      else if (key == "adaptive_r") cfg.adaptive_r_enabled = to_bool(val, line_no);
      else if (key == "compensation") cfg.compensation_enabled = to_bool(val, line_no);
      else throw ParseError("unknown pipeline key: " + key, line_no);
    }
  }

  if (cfg.mask.r_dilate <= cfg.mask.r_erode || cfg.mask.r_erode < 0) {
    throw ConfigError("mask radii must satisfy r_dilate > r_erode >= 0");
  }
  return cfg;
}

}  // namespace adugs::harness
