#include "sipsamp/kernels.hpp"

#include <stdexcept>

namespace sipsamp {

Kernel kernel_G(double p, KernelBackend backend, GridPtr grid) {
  Exponent::from_p(p);
  if (backend == KernelBackend::ClosedForm) {
    return Kernel([](double s, double t) { return Complex(sinc(t - s), 0.0); }, backend,
                  std::move(grid));
  }
  if (!grid) throw std::invalid_argument("kernel_G: quadrature backend needs a grid");
  auto g = grid;
  return Kernel(
      [g, p](double s, double t) { return sip(phi_spectrum(s, g), phi_spectrum(t, g), p); },
      backend, std::move(grid));
}

CoeffSeq phi_seq(const SamplingSystem& sys, double t) {
  CoeffSeq c(sys.half_width, Exponent::from_p(sys.exponent.q));
  for (int r = 0; r < c.size(); ++r) c.entries[r] = sys.atoms[r].eval(t);
  require_finite(c);
  return c;
}

Complex gsamp_eval(const SamplingSystem& sys, double s, double t, double q) {
  const CoeffSeq phi_s = phi_seq(sys, s);
  const CoeffSeq phi_t = phi_seq(sys, t);
  return pair_bilinear(phi_t, duality_map(phi_s, q));
}

}  // namespace sipsamp
