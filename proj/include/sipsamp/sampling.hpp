#pragma once

// Kramer-type sampling reconstruction at finite truncation: the truncated
// sampling series, interpolation-condition checks, sampling-basis
// biorthogonality, and the tail/decay estimates of the band-limited example.

#include <vector>

#include "sipsamp/kernels.hpp"

namespace sipsamp {

struct ReconstructionResult {
  Complex value{0.0};      // sum_{|j|<=N} samples_j S_j(t) / a_j, rank order
  int truncation = 0;      // N
  double tail_bound = 0.0; // l_q sinc-tail estimate at (t, N); +inf if undefined
  double absolute_sum = 0.0;
};

/// max_{|j|,|k| <= N} |S_j(t_k) - a_j delta_jk|.
double check_interpolation(const SamplingSystem& sys);

/// Truncated sampling series at t from raw samples (rank order, aligned
/// with the nodes).
ReconstructionResult reconstruct(const SamplingSystem& sys, const CVec& samples, double t);

/// (1/pi) (sum_{|j|>N} |t-j|^(-q))^(1/q).  The tail is closed by the
/// integral of x^(-q) plus Euler-Maclaurin corrections, with the remainder
/// bracketed by the first omitted term; relative error <= 1e-10.  Throws if
/// t is an integer with |t| > N (a tail term would be singular).
double tail_bound(double t, int N, double q);

/// Quadrature evaluation of the truncation-error factor
/// ( integral_I | Ghat_t(w) - sum_{|j|<=N} sinc(t-j) Ghat_j(w) |^q dw )^(1/q),
/// the exact L_q norm of the discarded tail sum_{|j|>N} Ghat_j G_j(t).
double tail_factor(double t, int N, double q, const GridPtr& grid);

/// Biorthogonality of the sampling basis against the kernel sections:
/// max_{j,k} | [a_j^{-1} S_j, G_{t_k}]_B - delta_jk |, computed in the
/// spectrum representation.
double check_sampling_basis(const SamplingSystem& sys, const Kernel& G, double p);

struct DecayCheck {
  std::vector<int> js;        // 1, -1, 2, -2, ..., J, -J
  std::vector<double> lhs;    // |f(j)|^p
  std::vector<double> rhs;    // C(p) ||fhat'||_p^p / |j|^p
  double C_p = 0.0;           // explicit integration-by-parts constant
  double boundary = 0.0;      // |fhat(1/2) - fhat(-1/2)|
  double deriv_l1 = 0.0;      // ||fhat'||_{L_1}
  double deriv_lp = 0.0;      // ||fhat'||_{L_p}
  bool all_within = false;
};

/// Sample-decay bound |f(j)|^p <= C(p) ||fhat'||_p^p / |j|^p for
/// 1 <= |j| <= J.  Requires a spectrum with an analytic derivative.
DecayCheck sample_decay_check(const BandlimitedFn& f, double p, int J);

}  // namespace sipsamp
