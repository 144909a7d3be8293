#pragma once

#include <cstdint>
#include <random>

#include "cpspinor/rational.hpp"

namespace cpspinor {

/// Deterministic seeded randomness for property checks.  Only raw mt19937_64
/// outputs are used (never std distributions), so streams are identical on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [0, n).
  long upto(long n) { return static_cast<long>(next() % static_cast<std::uint64_t>(n)); }

  /// Integer in [lo, hi].
  long range(long lo, long hi) { return lo + upto(hi - lo + 1); }

  /// Small rational with numerator in [-bound, bound] and denominator in
  /// {1, 2, 3}.
  Rat small_rat(long bound = 5) {
    Rat r(range(-bound, bound), range(1, 3));
    r.canonicalize();
    return r;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cpspinor
