#pragma once

#include <cstdint>
#include <random>

namespace ngs {

/// splitmix64 finalizer; used to derive independent seed streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(a ^ splitmix64(b));
}

/// Deterministic random source. Wraps mt19937_64 and hand-rolls the
/// distributions we use, so that results do not depend on the standard
/// library's (implementation-defined) distribution algorithms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double real01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % n;
    }
  }

  bool bernoulli(double p) { return real01() < p; }

 private:
  std::mt19937_64 gen_;
};

/// Substream tags. Each (tag, indices...) tuple names one independent
/// stream derived from the root seed, so that e.g. offspring k of
/// iteration i sees the same randomness regardless of evaluation order.
namespace stream {
inline constexpr std::uint64_t kInitRollout = 1;
inline constexpr std::uint64_t kSelection = 2;
inline constexpr std::uint64_t kOffspring = 3;
inline constexpr std::uint64_t kReplacement = 4;
inline constexpr std::uint64_t kRepetition = 5;
inline constexpr std::uint64_t kInstance = 6;
}  // namespace stream

inline Rng make_stream(std::uint64_t seed, std::uint64_t tag) {
  return Rng(mix_seed(seed, tag));
}

inline Rng make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t a) {
  return Rng(mix_seed(mix_seed(seed, tag), a));
}

inline Rng make_stream(std::uint64_t seed, std::uint64_t tag, std::uint64_t a,
                       std::uint64_t b) {
  return Rng(mix_seed(mix_seed(mix_seed(seed, tag), a), b));
}

}  // namespace ngs
