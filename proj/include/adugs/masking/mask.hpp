#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adugs/core/types.hpp"

namespace adugs::masking {

/// Binary raster, one byte per pixel (1 = dynamic). Row-major.
class BinaryMask {
 public:
  BinaryMask() = default;
  BinaryMask(int width, int height)
      : width_(width),
        height_(height),
        bits_(static_cast<std::size_t>(width) * height, 0) {}

  int width() const { return width_; }
  int height() const { return height_; }

  bool at(int x, int y) const {
    return bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool v) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = v ? 1 : 0;
  }
  /// Bounds-checked read; out-of-grid pixels read as false.
  bool test(int x, int y) const {
    return x >= 0 && x < width_ && y >= 0 && y < height_ && at(x, y);
  }

  const std::uint8_t* row(int y) const {
    return bits_.data() + static_cast<std::size_t>(y) * width_;
  }
  std::uint8_t* row(int y) {
    return bits_.data() + static_cast<std::size_t>(y) * width_;
  }

  std::size_t count() const;
  bool none() const { return count() == 0; }

  bool operator==(const BinaryMask&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Disk of integer radius: offsets {(dx,dy) : dx^2 + dy^2 <= r^2}. Stored as
/// per-row chord half-widths so the morphology kernels can sweep rows.
struct StructuringElement {
  int radius = 0;
  std::vector<int> chord;  // chord[dy + radius] = max |dx| on that row

  static StructuringElement disk(int radius);
  std::vector<std::pair<int, int>> offsets() const;
};

/// True iff the nearest pixel to p is in bounds and set.
bool contains(const BinaryMask& mask, const Point2& p);

/// Pixelwise OR. Throws ConfigError on dimension mismatch.
BinaryMask union_masks(std::span<const BinaryMask> masks);

/// Plain-text PBM (P1) dump for visual inspection.
void write_pbm(const BinaryMask& mask, const std::string& path);

}  // namespace adugs::masking
