#pragma once

#include <cstdint>
#include <string_view>

namespace adugs {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

/// Derives an independent generator stream from a base seed and a subsystem
/// tag. Streams with different tags never share draws.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view tag);

/// Counter-based draws: the value depends only on (stream, a, b, salt), never
/// on call order. Used wherever noise must be attributable to a fixed
/// (frame, entity) key so that unrelated pipeline changes cannot shift it.
double uniform_at(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                  std::uint64_t salt);  // in [0, 1)
double normal_at(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                 std::uint64_t salt);  // standard normal
bool bernoulli_at(std::uint64_t stream, std::uint64_t a, std::uint64_t b,
                  std::uint64_t salt, double p);

/// Sequential deterministic stream for draws without a natural counter key.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::string_view tag);

  std::uint64_t next_u64();
  double uniform();  // in [0, 1)
  double uniform(double lo, double hi);
  double normal();
  bool bernoulli(double p);
  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t state_;
};

}  // namespace adugs
