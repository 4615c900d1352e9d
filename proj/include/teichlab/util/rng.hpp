#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace teichlab {

/// Seeded generator with portable draw functions. std::mt19937_64 output is
/// fully specified by the standard; the distributions below avoid
/// std::uniform_*_distribution, whose streams are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }

  /// Independent stream for a labelled sub-experiment of the same seed.
  Rng fork(std::uint64_t label) const {
    std::uint64_t s = seed_ ^ (0x9e3779b97f4a7c15ULL * (label + 1));
    s ^= s >> 33;
    s *= 0xff51afd7ed558ccdULL;
    s ^= s >> 33;
    return Rng(s == 0 ? 1 : s);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
};

/// 64-bit FNV-1a, used for config hashes in JSON summaries.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace teichlab
