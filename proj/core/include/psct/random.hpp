#pragma once

#include <cstdint>
#include <random>

#include "psct/exterior.hpp"

namespace psct {

// Seeded source for the sampling helpers; draws avoid the implementation-defined
// standard distributions so sequences are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

 private:
  std::mt19937_64 engine_;
};

// Form of the given degree supported on round(fraction * C(n, k)) random
// multi-indices (at least one), with coefficients in {-3..3} \ {0}.
KForm random_form(int n, int degree, Rng& rng, double fraction = 0.3);
Matrix random_signed_permutation(int n, Rng& rng);
// Rational rotation (determinant +1) via the Cayley transform of a random skew matrix.
Matrix random_rotation(int n, Rng& rng);

}  // namespace psct
