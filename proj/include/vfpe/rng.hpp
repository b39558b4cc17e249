#pragma once

#include <cstdint>
#include <random>

namespace vfpe {

/// Purpose tags for per-node random substreams. Keeping the streams
/// separate means a change in one consumer (e.g. beacon entry selection)
/// cannot perturb the draws seen by another (e.g. waypoint mobility),
/// which is what makes paired comparisons across schemes meaningful.
enum class StreamPurpose : std::uint64_t {
  InitPlacement = 1,
  RwpLeg = 2,
  BeaconPhase = 3,
  BeaconSelect = 4,
  RoutingPhase = 5,
};

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Stable seed derivation for a (run, node, purpose) substream.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint32_t node,
                                 StreamPurpose purpose) {
  std::uint64_t s = root;
  std::uint64_t a = splitmix64(s);
  s ^= (static_cast<std::uint64_t>(node) << 32) | static_cast<std::uint64_t>(purpose);
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x9E3779B97F4A7C15ULL);
}

/// Seeded random substream. Uniform doubles are produced from the raw
/// engine output so the sequence does not depend on the standard
/// library's distribution implementations.
class Substream {
 public:
  Substream() : engine_(0) {}
  explicit Substream(std::uint64_t seed) : engine_(seed) {}
  Substream(std::uint64_t root, std::uint32_t node, StreamPurpose purpose)
      : engine_(derive_seed(root, node, purpose)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n). n must be > 0.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vfpe
