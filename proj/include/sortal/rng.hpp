#ifndef SORTAL_RNG_HPP
#define SORTAL_RNG_HPP

#include <cstdint>
#include <cstddef>

namespace sortal {

/// splitmix64: deterministic across platforms, one word of state.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish pick in [0, n); n must be positive.
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  bool chance(std::size_t num, std::size_t den) { return pick(den) < num; }
};

}  // namespace sortal

#endif
