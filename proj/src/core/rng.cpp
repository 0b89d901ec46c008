#include "adugs/core/rng.hpp"

#include <cmath>
#include <numbers>

namespace adugs {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

double to_unit(std::uint64_t u) {
  // 53 mantissa bits -> [0, 1)
  return static_cast<double>(u >> 11) * 0x1.0p-53;
}

std::uint64_t hash3(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                    std::uint64_t salt) {
  std::uint64_t h = stream;
  h = mix64(h ^ (a + kGolden));
  h = mix64(h ^ (b + 0xbf58476d1ce4e5b9ULL));
  h = mix64(h ^ (salt + 0x94d049bb133111ebULL));
  return h;
}

double normal_from_units(double u1, double u2) {
  // Box-Muller; u1 shifted into (0, 1] so the log is finite.
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag, folded into the seed.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char ch : tag) {
    h ^= static_cast<unsigned char>(ch);
    h *= 0x100000001b3ULL;
  }
  return mix64(seed ^ h);
}

double uniform_at(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                  std::uint64_t salt) {
  return to_unit(hash3(stream, a, b, salt));
}

double normal_at(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                 std::uint64_t salt) {
  const double u1 = to_unit(hash3(stream, a, b, 2 * salt));
  const double u2 = to_unit(hash3(stream, a, b, 2 * salt + 1));
  return normal_from_units(u1, u2);
}

bool bernoulli_at(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                  std::uint64_t salt, double p) {
  return uniform_at(stream, a, b, salt) < p;
}

StreamRng::StreamRng(std::uint64_t seed, std::string_view tag)
    : state_(stream_seed(seed, tag)) {}

std::uint64_t StreamRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double StreamRng::uniform() { return to_unit(next_u64()); }

double StreamRng::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

double StreamRng::normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  return normal_from_units(u1, u2);
}

bool StreamRng::bernoulli(double p) { return uniform() < p; }

int StreamRng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

}  // namespace adugs
