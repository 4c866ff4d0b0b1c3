#pragma once

// The s.i.p. reproducing kernel G of the band-limited space, in closed form
// (sinc) and quadrature-backed form, and the sampling kernel G_samp of the
// synthesized space.

#include <functional>

#include "sipsamp/sampling_system.hpp"
#include "sipsamp/seqspace.hpp"

namespace sipsamp {

enum class KernelBackend { ClosedForm, Quadrature };

class Kernel {
 public:
  Kernel(std::function<Complex(double, double)> eval, KernelBackend backend, GridPtr grid)
      : eval_(std::move(eval)), backend_(backend), grid_(std::move(grid)) {}

  Complex operator()(double s, double t) const { return eval_(s, t); }
  KernelBackend backend() const { return backend_; }
  const GridPtr& grid() const { return grid_; }

  /// Spectrum of the section G_t = G(t, .): w -> exp(-2 pi i t w).
  GridFn section_spectrum(double t) const { return phi_spectrum(t, grid_); }

 private:
  std::function<Complex(double, double)> eval_;
  KernelBackend backend_;
  GridPtr grid_;
};

/// G(s, t) = [Phi(s), Phi(t)]_p.  Closed form sinc(t - s); the quadrature
/// backend evaluates the s.i.p. of the exponential feature maps.  The
/// unimodular integrand makes the value independent of p.
Kernel kernel_G(double p, KernelBackend backend, GridPtr grid);

/// phi(t) = {S_j(t)}_{|j|<=N} as a coefficient sequence, tagged with the
/// X_d exponent q.
CoeffSeq phi_seq(const SamplingSystem& sys, double t);

/// G_samp(s, t) = sum_j (S_j(s))* S_j(t), truncated at the system window.
/// The star is the l_q duality map of phi(s) (the X_d exponent), producing
/// an l_p element which is then paired bilinearly with phi(t).
Complex gsamp_eval(const SamplingSystem& sys, double s, double t, double q);

/// G_samp as an evaluator tied to a system.
struct SampKernel {
  const SamplingSystem* sys = nullptr;
  double q = 2.0;
  Complex operator()(double s, double t) const { return gsamp_eval(*sys, s, t, q); }
};

inline SampKernel samp_kernel(const SamplingSystem& sys) {
  return SampKernel{&sys, sys.exponent.q};
}

}  // namespace sipsamp
