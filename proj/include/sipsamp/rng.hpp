#pragma once

// Deterministic random draws for the bound estimators.  The 53-bit uniform
// and Box-Muller Gaussian are hand-rolled on top of mt19937_64 so the same
// seed produces the same stream on every platform; std::*_distribution is
// implementation-defined and would break golden-file regressions.

#include <cstdint>
#include <random>

#include "sipsamp/core.hpp"

namespace sipsamp {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * u2);
  }

  Complex cgaussian() {
    const double re = gaussian();
    return Complex(re, gaussian());
  }

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

inline CVec complex_gaussian_vector(Rng& rng, int n) {
  CVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.cgaussian();
  return v;
}

}  // namespace sipsamp
