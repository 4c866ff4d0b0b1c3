#pragma once

// Finite-section verification of the converse sampling theorem: Bessel,
// frame and Riesz bound estimation, biorthogonality and minimality checks,
// the M_j family, and the two biorthogonal-expansion formulas.
//
// All "for every f" statements are tested on the span of {S_j, |j| <= N};
// the reported bounds are one-sided: the lower estimate A is an upper bound
// on the true lower constant, the upper estimate B a lower bound on the
// true upper constant (random search cannot certify the other side).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "sipsamp/sampling.hpp"

namespace sipsamp {

enum class BoundMethod { RandomSearch, Exhaustive };

struct BoundEstimate {
  double lower_A = 0.0;
  double upper_B = 0.0;
  BoundMethod method = BoundMethod::RandomSearch;
  int trials = 0;
  std::uint64_t seed = 0;
};

/// M_j(t) = conj(a_j)^{-1} G_samp(t_j, t).
std::function<Complex(double)> make_Mj(const SamplingSystem& sys, int j);

/// Coefficient vector of M_j in the S-expansion of B_samp:
/// m_j = J_q(phi(t_j)) / conj(a_j).
CoeffSeq Mj_coefficients(const SamplingSystem& sys, int j);

/// [f, M_j]_samp for f = sum_k c_k S_k, computed through the coefficient
/// space: [c, m_j]_{l_p}.  Equals a_j^{-1} f(t_j) when the hypotheses hold.
Complex sip_samp_Mj(const SamplingSystem& sys, const CoeffSeq& c, int j);

/// Biorthogonality [S_j, M_k]_samp = a_k^{-1} S_j(t_k): max |entry - delta_jk|.
double biorth_matrix_SM(const SamplingSystem& sys);
CMat biorth_SM_matrix(const SamplingSystem& sys);

/// Sampling-basis biorthogonality matrix [a_j^{-1} S_j, G_{t_k}]_B.
CMat sampling_basis_matrix(const SamplingSystem& sys, const Kernel& G, double p);

/// Feature-side Gram [Phi(t_j)/conj(a_j), Phi(t_k)/conj(a_k)]_E.
CMat feature_gram_matrix(const SamplingSystem& sys, double p);

/// Coefficient-side Gram [phi*(t_j)/conj(a_j), phi*(t_k)/conj(a_k)]_{X_d*}.
CMat samp_gram_matrix(const SamplingSystem& sys);

/// sup / inf of || sum_j d_j Shat_j ||_{L_p(I)} over the unit l_q sphere.
/// bessel_bound refines the max side only; riesz_bounds_S refines both and
/// doubles as the norm-equivalence constant estimate.
BoundEstimate bessel_bound(const SamplingSystem& sys, double p, int trials, std::uint64_t seed);
BoundEstimate riesz_bounds_S(const SamplingSystem& sys, double p, int trials, std::uint64_t seed);

/// Range of r(f) = ||{f(t_j)/a_j}||_{l_q} / ||fhat||_{L_p} over random
/// band-limited f with trig-polynomial spectrum of degree <= N.
BoundEstimate frame_bounds_M(const SamplingSystem& sys, double p, int trials, std::uint64_t seed);

/// max_t |RHS_j(t) - M_j(t)| where RHS_j = sum_k [phi*(t_j)/conj(a_j),
/// phi*(t_k)/conj(a_k)]_{X_d*} S_k.
double check_formula3(const SamplingSystem& sys, int j, std::span<const double> lattice);

/// max_t |RHS_j(t) - G_j(t)| where RHS_j = sum_k [Phi(t_j)/conj(a_j),
/// Phi(t_k)/conj(a_k)]_E S_k and G_j(t) = conj(a_j)^{-1} G(t_j, t).
double check_formula4(const SamplingSystem& sys, int j, std::span<const double> lattice, double p);

struct MinimalityResult {
  bool minimal = false;
  std::vector<GridFn> duals;   // g_k with [f_j, g_k]_p = delta_jk
  double residual = 0.0;       // max |[f_j, g_k]_p - delta_jk|
  double condition = 0.0;      // singular-value ratio of the pairing matrix
  int rank = 0;
};

/// Solve for the biorthogonal duals of a finite family of spectra under
/// [.,.]_p, or report rank deficiency.
MinimalityResult minimality_check(const std::vector<GridFn>& family, double p);

/// Build f = sum_j c_j S_j and return max_j |[f, M_j]_samp - c_j|.
double riesz_fischer_check(const SamplingSystem& sys, const CoeffSeq& c, double p);

struct VerifyConfig {
  double p = 2.0;
  int half_width = 32;
  int grid_order = 16;
  int panels = 0;  // 0: auto, max(8, half_width)
  std::uint64_t seed = 42;
  int trials = 2000;
  Complex weight{1.0, 0.0};
  std::map<int, double> node_shifts;
  std::vector<double> lattice = {0.1, 0.25, 0.5, 0.9, 3.3, -0.1, -0.25, -0.5, -0.9, -3.3};
};

struct VerificationReport {
  VerifyConfig config;
  double interpolation_dev = 0.0;
  double biorth_SM_dev = 0.0;
  double biorth_SG_dev = 0.0;
  BoundEstimate bessel_B;
  BoundEstimate frame_AB;
  BoundEstimate riesz_AB;
  double formula3_dev = 0.0;
  double formula4_dev = 0.0;
  std::pair<double, double> norm_equiv_ratio_range{0.0, 0.0};

  double max_deterministic_dev() const {
    return std::max(std::max(interpolation_dev, biorth_SM_dev),
                    std::max(biorth_SG_dev, std::max(formula3_dev, formula4_dev)));
  }
};

SamplingSystem system_from_config(const VerifyConfig& cfg);
VerificationReport run_verification(const VerifyConfig& cfg);
VerificationReport run_verification(const SamplingSystem& sys, const VerifyConfig& cfg);

}  // namespace sipsamp
