#pragma once

#include <memory>
#include <vector>

#include "adugs/core/rng.hpp"
#include "adugs/core/types.hpp"
#include "adugs/masking/mask.hpp"

namespace adugs::masking {

/// Rounded-corner rectangle, the simulator's object silhouette shape.
struct SilhouetteSpec {
  BoundingBox box;
  double corner_radius = 0.0;

  bool covers(double px, double py) const;
};

/// Everything a segmenter may look at for one frame.
struct SegmentContext {
  int width = 0;
  int height = 0;
  std::vector<SilhouetteSpec> silhouettes;
};

/// Promptable segmentation contract: the returned mask has frame dimensions
/// and is false everywhere outside the prompt box.
class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual BinaryMask segment(const SegmentContext& ctx,
                             const BoundingBox& prompt) = 0;
};

/// Marks the entire prompt box dynamic.
class BoxFillSegmenter : public Segmenter {
 public:
  BinaryMask segment(const SegmentContext& ctx,
                     const BoundingBox& prompt) override;
};

/// Ground-truth silhouettes intersected with the prompt box.
class OracleSilhouetteSegmenter : public Segmenter {
 public:
  BinaryMask segment(const SegmentContext& ctx,
                     const BoundingBox& prompt) override;
};

/// Wraps another segmenter and corrupts its output inside the prompt box:
/// flips pixels adjacent to the mask boundary and injects small speckles,
/// reproducing the failure modes the refine step is meant to undo.
class NoisySegmenter : public Segmenter {
 public:
  NoisySegmenter(std::unique_ptr<Segmenter> inner, double flip_prob,
                 int max_speckles, std::uint64_t seed);

  BinaryMask segment(const SegmentContext& ctx,
                     const BoundingBox& prompt) override;

 private:
  std::unique_ptr<Segmenter> inner_;
  double flip_prob_;
  int max_speckles_;
  StreamRng rng_;
};

}  // namespace adugs::masking
