#pragma once

#include "adugs/core/types.hpp"
#include "adugs/masking/kernels.hpp"
#include "adugs/masking/mask.hpp"

namespace adugs::masking {

/// Pixel survives iff every element offset lands on a set pixel; pixels
/// outside the grid count as unset.
BinaryMask erode(const BinaryMask& mask, const StructuringElement& se);

/// Pixel is set iff some element offset lands on a set pixel of the input.
BinaryMask dilate(const BinaryMask& mask, const StructuringElement& se);

/// Erode with disk(r_erode), then dilate with disk(r_dilate).
/// Requires r_dilate > r_erode >= 0; throws ConfigError otherwise.
BinaryMask refine(const BinaryMask& mask, int r_erode, int r_dilate);

/// Kernel-pinned variants for scalar/SIMD equivalence tests.
BinaryMask erode_with(const BinaryMask& mask, const StructuringElement& se,
                      const kernels::Kernels& k);
BinaryMask dilate_with(const BinaryMask& mask, const StructuringElement& se,
                       const kernels::Kernels& k);

/// Refines `part` (true pixels confined to `box`) and ORs the result into
/// `dst`. Runs the morphology on a cropped window around the box; the result
/// equals refine() on the full frame because the window pads the box by the
/// full dependency radius r_erode + r_dilate.
void refine_box_into(BinaryMask& dst, const BinaryMask& part,
                     const BoundingBox& box, int r_erode, int r_dilate);

}  // namespace adugs::masking
