#ifndef HYPEROCT_RANDOM_HPP
#define HYPEROCT_RANDOM_HPP

#include <cstdint>

namespace hyperoct {

/// SplitMix64: a counter-based generator. `split` derives an independent
/// stream from (state, stream id), so case i of a seeded run can be replayed
/// without drawing cases 0..i-1.
///
/// Bounded draws use rejection sampling rather than <random> distributions so
/// that output is identical across standard library implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() noexcept { return (next() >> 63) != 0; }

  SplitMix64 split(std::uint64_t stream) const noexcept {
    return SplitMix64(mix(state_ ^ mix(stream + kGamma)));
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace hyperoct

#endif  // HYPEROCT_RANDOM_HPP
