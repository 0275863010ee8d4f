#pragma once

#include <cstdint>

#include "dunkl/rational.hpp"

namespace dunkl {

// splitmix64. Hand-rolled so reports are byte-identical regardless of the
// platform's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  long int_in(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Small rational, possibly zero, denominator in 1..max_den.
  Rational rational(long max_abs_num = 4, long max_den = 3) {
    return make_rational(int_in(-max_abs_num, max_abs_num), int_in(1, max_den));
  }

  Rational nonzero_rational(long max_abs_num = 4, long max_den = 3) {
    for (;;) {
      Rational r = rational(max_abs_num, max_den);
      if (!is_zero(r)) return r;
    }
  }

 private:
  std::uint64_t state_;
};

// Stable per-case seed derivation for parallel suite execution.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  Rng rng(base ^ (0x51d6a4feULL + index * 0x9e3779b97f4a7c15ULL));
  return rng.next();
}

}  // namespace dunkl
