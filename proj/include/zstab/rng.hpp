#pragma once

#include <cstdint>

#include "zstab/rational.hpp"

namespace zstab {

// SplitMix64. Used for every randomized suite so reports are reproducible
// from the recorded seed alone.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Integer in [lo, hi], inclusive.
  long int_in(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small rational with numerator in [-bound, bound] and denominator in
  // [1, den_bound].
  Rat rat_in(long bound, long den_bound = 4) {
    Rat r(int_in(-bound, bound), int_in(1, den_bound));
    r.canonicalize();
    return r;
  }

  // Nonzero variant.
  Rat nonzero_rat(long bound, long den_bound = 4) {
    while (true) {
      Rat r = rat_in(bound, den_bound);
      if (r != 0) return r;
    }
  }

private:
  std::uint64_t state_;
};

}  // namespace zstab
