#ifndef MONOIDFORGE_RNG_HPP
#define MONOIDFORGE_RNG_HPP

#include <cstdint>

namespace mf {

/// splitmix64; used to derive independent per-item seeds from a master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Deterministic generator with an implementation-independent bounded draw,
/// so seeded runs reproduce byte-identically everywhere (xoshiro-style core
/// built on splitmix64 streams).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(mix_seed(seed ^ 0x6d6f6e6f6964ull)) {}

  std::uint64_t next() {
    state_ = mix_seed(state_);
    return state_;
  }

  /// Uniform in [lo, hi] (modulo reduction; bias immaterial at desk scale).
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1u; }

private:
  std::uint64_t state_;
};

} // namespace mf

#endif
