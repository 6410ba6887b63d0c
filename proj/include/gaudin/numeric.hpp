#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gaudin/types.hpp"

namespace gaudin::numeric {

// exp(z) - 1 with a series fallback so small arguments keep full relative
// accuracy in the complex case (std::expm1 exists only for reals).
inline Complex expm1c(Complex z) {
  if (std::abs(z) < 1e-4) {
    return z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0))));
  }
  return std::exp(z) - 1.0;
}

/// coth(z) - 1 = 2 / (e^{2z} - 1).  Poles on the lattice z in i*pi*Z.
inline Complex cothm1(Complex z) {
  Complex d = expm1c(2.0 * z);
  if (d == Complex(0.0, 0.0)) throw std::domain_error("cothm1: pole at i*pi*k");
  return 2.0 / d;
}

/// coth(z) + 1 = 2 / (1 - e^{-2z}).
inline Complex cothp1(Complex z) {
  Complex d = -expm1c(-2.0 * z);
  if (d == Complex(0.0, 0.0)) throw std::domain_error("cothp1: pole at i*pi*k");
  return 2.0 / d;
}

inline Complex coth(Complex z) { return 1.0 + cothm1(z); }

/// tanh(z) + 1 = 2 / (1 + e^{-2z}).  Poles at z = i*pi*(k + 1/2).
inline Complex tanhp1(Complex z) {
  Complex d = 1.0 + std::exp(-2.0 * z);
  if (d == Complex(0.0, 0.0)) throw std::domain_error("tanhp1: pole");
  return 2.0 / d;
}

// Long-double variants used where two analytically cancelling terms meet;
// 80-bit arithmetic keeps residual checks well below their tolerances even
// close to the sampling pole guard.
inline long double cothm1l(long double x) {
  if (x == 0.0L) throw std::domain_error("cothm1l: pole at 0");
  return 2.0L / std::expm1(2.0L * x);
}

inline long double cothl(long double x) { return 1.0L + cothm1l(x); }

/// Deterministic splitmix64-based generator.  std::uniform_real_distribution
/// is implementation-defined; this keeps sampled values identical across
/// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace gaudin::numeric
