#include "adugs/masking/morphology.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

#include "adugs/core/error.hpp"

namespace adugs::masking {

namespace {

// Rows copied into a buffer with `pad` zero bytes each side, so shifted
// loads never leave the allocation and out-of-grid pixels read as unset.
struct PaddedRows {
  int w, pad, stride;
  std::vector<std::uint8_t> buf;

  PaddedRows(const BinaryMask& m, int pad_)
      : w(m.width()),
        pad(pad_),
        stride(m.width() + 2 * pad_),
        buf(static_cast<std::size_t>(stride) * m.height(), 0) {
    for (int y = 0; y < m.height(); ++y) {
      std::memcpy(buf.data() + static_cast<std::size_t>(y) * stride + pad,
                  m.row(y), w);
    }
  }
  const std::uint8_t* row(int y) const {
    return buf.data() + static_cast<std::size_t>(y) * stride + pad;
  }
};

BinaryMask morph(const BinaryMask& m, const StructuringElement& se,
                 bool is_erode, const kernels::Kernels& k) {
  const int w = m.width();
  const int h = m.height();
  const int r = se.radius;
  BinaryMask out(w, h);
  if (w == 0 || h == 0) return out;

  const PaddedRows padded(m, std::max(r, 1));
  std::vector<std::uint8_t> acc(w);
  for (int y = 0; y < h; ++y) {
    std::fill(acc.begin(), acc.end(), is_erode ? 1 : 0);
    for (int dy = -r; dy <= r; ++dy) {
      const int yy = y + dy;
      const int c = se.chord[dy + r];
      if (yy < 0 || yy >= h) {
        if (is_erode) {
          // an element row falls off the grid: nothing on this row survives
          std::fill(acc.begin(), acc.end(), 0);
          break;
        }
        continue;
      }
      if (is_erode) {
        k.and_range(acc.data(), padded.row(yy), w, -c, c);
      } else {
        k.or_range(acc.data(), padded.row(yy), w, -c, c);
      }
    }
    std::memcpy(out.row(y), acc.data(), w);
  }
  return out;
}

}  // namespace

BinaryMask erode(const BinaryMask& mask, const StructuringElement& se) {
  return morph(mask, se, true, kernels::active_kernels());
}

BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se) {
  return morph(mask, se, false, kernels::active_kernels());
}

BinaryMask erode_with(const BinaryMask& mask, const StructuringElement& se,
                      const kernels::Kernels& k) {
  return morph(mask, se, true, k);
}

BinaryMask dilate_with(const BinaryMask& mask, const StructuringElement& se,
                       const kernels::Kernels& k) {
  return morph(mask, se, false, k);
}

BinaryMask refine(const BinaryMask& mask, int r_erode, int r_dilate) {
  if (r_erode < 0 || r_dilate <= r_erode) {
    throw ConfigError("refine: requires r_dilate > r_erode >= 0");
  }
  return dilate(erode(mask, StructuringElement::disk(r_erode)),
                StructuringElement::disk(r_dilate));
}

void refine_box_into(BinaryMask& dst, const BinaryMask& part,
                     const BoundingBox& box, int r_erode, int r_dilate) {
  if (r_erode < 0 || r_dilate <= r_erode) {
    throw ConfigError("refine: requires r_dilate > r_erode >= 0");
  }
  const int margin = r_erode + r_dilate + 1;
  const int x0 = std::clamp(static_cast<int>(std::floor(box.left())) - margin,
                            0, dst.width());
  const int x1 = std::clamp(static_cast<int>(std::ceil(box.right())) + margin + 1,
                            0, dst.width());
  const int y0 = std::clamp(static_cast<int>(std::floor(box.top())) - margin,
                            0, dst.height());
  const int y1 = std::clamp(static_cast<int>(std::ceil(box.bottom())) + margin + 1,
                            0, dst.height());
  if (x1 <= x0 || y1 <= y0) return;

  BinaryMask crop(x1 - x0, y1 - y0);
  for (int y = y0; y < y1; ++y) {
    std::memcpy(crop.row(y - y0), part.row(y) + x0, x1 - x0);
  }
  const BinaryMask refined = refine(crop, r_erode, r_dilate);
  for (int y = y0; y < y1; ++y) {
    std::uint8_t* out = dst.row(y) + x0;
    const std::uint8_t* src = refined.row(y - y0);
    for (int x = 0; x < x1 - x0; ++x) out[x] |= src[x];
  }
}

}  // namespace adugs::masking
