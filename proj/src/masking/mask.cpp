#include "adugs/masking/mask.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>

#include "adugs/core/error.hpp"

namespace adugs::masking {

std::size_t BinaryMask::count() const {
  std::size_t n = 0;
  for (const auto b : bits_) n += b;
  return n;
}

StructuringElement StructuringElement::disk(int radius) {
  StructuringElement se;
  se.radius = radius;
  se.chord.resize(2 * radius + 1);
  for (int dy = -radius; dy <= radius; ++dy) {
    se.chord[dy + radius] =
        static_cast<int>(std::floor(std::sqrt(
            static_cast<double>(radius) * radius - static_cast<double>(dy) * dy)));
  }
  return se;
}

std::vector<std::pair<int, int>> StructuringElement::offsets() const {
  std::vector<std::pair<int, int>> out;
  for (int dy = -radius; dy <= radius; ++dy) {
    const int c = chord[dy + radius];
    for (int dx = -c; dx <= c; ++dx) out.emplace_back(dx, dy);
  }
  return out;
}

bool contains(const BinaryMask& mask, const Point2& p) {
  const int x = static_cast<int>(std::lround(p.x));
  const int y = static_cast<int>(std::lround(p.y));
  return mask.test(x, y);
}

BinaryMask union_masks(std::span<const BinaryMask> masks) {
  if (masks.empty()) return {};
  BinaryMask out = masks[0];
  for (std::size_t i = 1; i < masks.size(); ++i) {
    const BinaryMask& m = masks[i];
    if (m.width() != out.width() || m.height() != out.height()) {
      throw ConfigError("union_masks: dimension mismatch");
    }
    for (int y = 0; y < out.height(); ++y) {
      std::uint8_t* dst = out.row(y);
      const std::uint8_t* src = m.row(y);
      for (int x = 0; x < out.width(); ++x) dst[x] |= src[x];
    }
  }
  return out;
}

void write_pbm(const BinaryMask& mask, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (f == nullptr) throw ConfigError("write_pbm: cannot open " + path);
  std::fprintf(f, "P1\n%d %d\n", mask.width(), mask.height());
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      std::fputc(mask.at(x, y) ? '1' : '0', f);
      std::fputc(x + 1 == mask.width() ? '\n' : ' ', f);
    }
  }
  std::fclose(f);
}

}  // namespace adugs::masking
