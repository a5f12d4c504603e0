#ifndef STICKEL_RANDOM_HPP
#define STICKEL_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace stickel {

/// mt19937_64 with an explicit rejection sampler, so draws are identical on
/// every standard library (std distributions are implementation-defined).
class SeededRng {
 public:
  explicit SeededRng(uint64_t seed) : engine_(seed) {}

  /// Seed derived from a base seed and a stream name (FNV-1a).
  SeededRng(uint64_t seed, std::string_view stream) : engine_(mix(seed, stream)) {}

  /// Uniform integer in [lo, hi].
  int64_t uniform(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<int64_t>(x % span);
  }

  static uint64_t mix(uint64_t seed, std::string_view stream) {
    uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : stream) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace stickel

#endif  // STICKEL_RANDOM_HPP
