#pragma once

// Finite sections of the sequence spaces l_p(Z), indices |j| <= N in the
// rank order 0, -1, 1, -2, 2, ...  All operations are pure; p is a runtime
// parameter.

#include <stdexcept>

#include "sipsamp/core.hpp"

namespace sipsamp {

/// Symmetric finite truncation of a Z-indexed complex sequence.
struct CoeffSeq {
  int half_width = 0;   // N; valid indices |j| <= N
  Exponent exponent;    // the l_p this section represents (tag only)
  CVec entries;         // rank order, size 2N+1

  CoeffSeq() = default;
  CoeffSeq(int N, Exponent e) : half_width(N), exponent(e), entries(CVec::Zero(window_size(N))) {}

  int size() const { return static_cast<int>(entries.size()); }

  Complex& at(int j) { return entries[checked_rank(j)]; }
  const Complex& at(int j) const { return entries[checked_rank(j)]; }

  int checked_rank(int j) const {
    if (j < -half_width || j > half_width)
      throw std::out_of_range("CoeffSeq: index outside the window");
    return rank_of(j);
  }

  bool finite() const { return entries.allFinite(); }
};

inline void require_same_window(const CoeffSeq& a, const CoeffSeq& b) {
  if (a.half_width != b.half_width || a.size() != b.size())
    throw std::invalid_argument("CoeffSeq: window mismatch");
}

inline void require_finite(const CoeffSeq& c) {
  if (!c.finite()) throw std::invalid_argument("CoeffSeq: non-finite entry");
}

/// (sum_j |c_j|^p)^(1/p).  Scaled by the max modulus for stability.
inline double lp_norm(const CoeffSeq& c, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  require_finite(c);
  const double m = c.entries.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (int r = 0; r < c.size(); ++r) s += std::pow(std::abs(c.entries[r]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

/// Normalized duality mapping of l_p: (d*)_j = conj(d_j)|d_j|^(p-2) / ||d||_p^(p-2).
/// Components with d_j = 0 map to 0; d = 0 maps to 0.  The result is tagged
/// with the conjugate exponent and satisfies ||d*||_q = ||d||_p.
inline CoeffSeq duality_map(const CoeffSeq& d, double p) {
  const Exponent e = Exponent::from_p(p);
  require_finite(d);
  CoeffSeq out(d.half_width, Exponent::from_p(e.q));
  const double norm = lp_norm(d, p);
  if (norm == 0.0) return out;
  const double denom = std::pow(norm, p - 2.0);
  for (int r = 0; r < d.size(); ++r) {
    const Complex z = d.entries[r];
    const double a = std::abs(z);
    // conj(z)|z|^(p-2) written as |z|^(p-1) * phase(conj z): stable for p < 2.
    out.entries[r] = a == 0.0 ? Complex(0.0) : std::pow(a, p - 1.0) * (std::conj(z) / a) / denom;
  }
  return out;
}

/// Duality pairing (c, d) = sum_j c_j d_j (no conjugation).
inline Complex pair_bilinear(const CoeffSeq& c, const CoeffSeq& d) {
  require_same_window(c, d);
  return (c.entries.array() * d.entries.array()).sum();
}

/// Semi-inner product [c, d]_p = sum_j c_j (d*)_j.  Compatible with the
/// norm: [d, d]_p = ||d||_p^2.
inline Complex sip(const CoeffSeq& c, const CoeffSeq& d, double p) {
  require_same_window(c, d);
  return pair_bilinear(c, duality_map(d, p));
}

}  // namespace sipsamp
