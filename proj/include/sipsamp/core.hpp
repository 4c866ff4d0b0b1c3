#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace sipsamp {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Conjugate exponent pair (p, q) with 1/p + 1/q = 1, both in (1, inf).
struct Exponent {
  double p = 2.0;
  double q = 2.0;

  static Exponent from_p(double p) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("Exponent: p must lie in (1, inf)");
    return Exponent{p, p / (p - 1.0)};
  }

  bool consistent() const {
    return p > 1.0 && q > 1.0 && std::abs(1.0 / p + 1.0 / q - 1.0) <= 1e-14;
  }
};

// Index ordering of Z used throughout: 0, -1, 1, -2, 2, ...
// rank(0) = 0, rank(-k) = 2k-1, rank(k) = 2k for k >= 1.
inline int rank_of(int j) { return j == 0 ? 0 : (j < 0 ? -2 * j - 1 : 2 * j); }

inline int index_at(int rank) {
  if (rank == 0) return 0;
  return (rank % 2 == 1) ? -(rank + 1) / 2 : rank / 2;
}

inline int window_size(int half_width) { return 2 * half_width + 1; }

/// sin(pi x)/(pi x).  Exact 0/1 at integers; degree-6 Taylor polynomial
/// below |x| = 1e-6 (error < 1e-25 there).  The exact integer zeros matter:
/// duality maps with exponent < 2 amplify residuals of sin(pi k) like
/// |eps|^(q-1).
inline double sinc(double x) {
  if (x == std::nearbyint(x)) return x == 0.0 ? 1.0 : 0.0;
  const double y = kPi * x;
  if (std::abs(x) < 1e-6) {
    const double y2 = y * y;
    return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0 * (1.0 - y2 / 42.0));
  }
  return std::sin(y) / y;
}

}  // namespace sipsamp
