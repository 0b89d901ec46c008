#pragma once

#include <string>

#include "adugs/features/anms.hpp"
#include "adugs/tracker/sort_tracker.hpp"

namespace adugs::harness {

enum class SegmenterKind { Oracle, BoxFill, NoisyOracle, NoisyBoxFill };

struct MaskConfig {
  SegmenterKind segmenter = SegmenterKind::Oracle;
  int r_erode = 2;
  int r_dilate = 5;
  double noise_flip_prob = 0.05;  // noisy segmenters only
  int noise_speckles = 3;
  bool dump_pbm = false;  // one PBM per frame into <out_dir>/masks
};

struct PipelineConfig {
  tracker::TrackerConfig tracker;
  MaskConfig mask;
  features::FeatureBudget features;
  bool odometry_trimmed = false;
  double cr_epsilon = 0.1;  // meters

  // ablation switches
  bool sort_enabled = true;
  bool mask_enabled = true;
  bool adaptive_r_enabled = true;
  bool compensation_enabled = true;
};

/// Flat "key = value" file with [section] headers; '#' starts a comment.
/// Unknown sections or keys raise ParseError with the offending line.
PipelineConfig load_pipeline_config(const std::string& path);

}  // namespace adugs::harness
