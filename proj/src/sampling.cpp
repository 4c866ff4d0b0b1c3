#include "sipsamp/sampling.hpp"

#include <limits>
#include <stdexcept>

namespace sipsamp {

double check_interpolation(const SamplingSystem& sys) {
  const int n = window_size(sys.half_width);
  double dev = 0.0;
  for (int rj = 0; rj < n; ++rj)
    for (int rk = 0; rk < n; ++rk) {
      const Complex expected = rj == rk ? sys.weights[rj] : Complex(0.0);
      dev = std::max(dev, std::abs(sys.atoms[rj].eval(sys.nodes[rk]) - expected));
    }
  return dev;
}

ReconstructionResult reconstruct(const SamplingSystem& sys, const CVec& samples, double t) {
  const int n = window_size(sys.half_width);
  if (static_cast<int>(samples.size()) != n)
    throw std::invalid_argument("reconstruct: sample count does not match the window");

  ReconstructionResult res;
  res.truncation = sys.half_width;
  for (int r = 0; r < n; ++r) {
    const Complex term = samples[r] * sys.atoms[r].eval(t) / sys.weights[r];
    res.value += term;
    res.absolute_sum += std::abs(term);
  }
  const bool tail_defined =
      !(t == std::nearbyint(t) && std::abs(t) > sys.half_width);
  res.tail_bound = tail_defined ? tail_bound(t, sys.half_width, sys.exponent.q)
                                : std::numeric_limits<double>::infinity();
  return res;
}

namespace {

// sum_{k>=0} (a + k)^(-q) for a > 0: explicit terms until the
// Euler-Maclaurin closure of the remainder meets the relative tolerance.
// The closure at offset m is
//   m^(1-q)/(q-1) + m^(-q)/2 + (q/12) m^(-q-1) - (q(q+1)(q+2)/720) m^(-q-3)
// with the error bracketed by the next term, ~ m^(-q-5).
double power_tail_sum(double a, double q, double reltol) {
  if (a <= 0.0) throw std::invalid_argument("tail_bound: singular tail term");
  double s = 0.0;
  double m = a;
  const double c3 = q * (q + 1.0) * (q + 2.0) / 720.0;
  const double c5 = q * (q + 1.0) * (q + 2.0) * (q + 3.0) * (q + 4.0) / 30240.0;
  for (int k = 0; k < 100000; ++k) {
    const double closure = std::pow(m, 1.0 - q) / (q - 1.0) + 0.5 * std::pow(m, -q) +
                           (q / 12.0) * std::pow(m, -q - 1.0) - c3 * std::pow(m, -q - 3.0);
    const double err = c5 * std::pow(m, -q - 5.0);
    if (err <= reltol * (s + closure)) return s + closure;
    s += std::pow(m, -q);
    m += 1.0;
  }
  throw std::runtime_error("tail_bound: tail closure did not converge");
}

}  // namespace

double tail_bound(double t, int N, double q) {
  if (!(q > 1.0)) throw std::invalid_argument("tail_bound: q must be > 1");
  if (N < 0) throw std::invalid_argument("tail_bound: N must be >= 0");
  if (t == std::nearbyint(t) && std::abs(t) > N)
    throw std::invalid_argument("tail_bound: integer t outside the window is singular");

  const double reltol = 1e-10;
  double sum = 0.0;
  // Right tail j = N+1, N+2, ... : walk explicit terms until the distances
  // |t - j| increase monotonically, then close with the power-tail formula.
  for (int side = 0; side < 2; ++side) {
    double j = static_cast<double>(N + 1);
    const double sgn = side == 0 ? 1.0 : -1.0;  // side 1 mirrors j -> -j
    while (true) {
      const double d = std::abs(t - sgn * j);
      const double dnext = std::abs(t - sgn * (j + 1.0));
      if (dnext > d && d >= 0.5) {
        sum += power_tail_sum(d, q, reltol);
        break;
      }
      if (d < 1e-9) throw std::invalid_argument("tail_bound: singular tail term");
      sum += std::pow(d, -q);
      j += 1.0;
    }
  }
  return std::pow(sum, 1.0 / q) / kPi;
}

double tail_factor(double t, int N, double q, const GridPtr& grid) {
  if (!(q > 1.0)) throw std::invalid_argument("tail_factor: q must be > 1");
  // Tail of the kernel expansion, collapsed through
  // Ghat_t = sum_{j in Z} sinc(t-j) Ghat_j:  the discarded part equals
  // Ghat_t - sum_{|j|<=N} sinc(t-j) Ghat_j pointwise on the open interval.
  GridFn tail = phi_spectrum(t, grid);
  for (int r = 0; r < window_size(N); ++r) {
    const int j = index_at(r);
    const double c = sinc(t - j);
    const GridFn gj = phi_spectrum(static_cast<double>(j), grid);
    tail.values -= c * gj.values;
  }
  return lp_norm(tail, q);
}

double check_sampling_basis(const SamplingSystem& sys, const Kernel& G, double p) {
  const int n = window_size(sys.half_width);
  // Precompute the duality-mapped kernel sections J_p(Ghat_{t_k}).
  std::vector<GridFn> jg;
  jg.reserve(n);
  for (int rk = 0; rk < n; ++rk)
    jg.push_back(duality_map(G.section_spectrum(sys.nodes[rk]), p));

  double dev = 0.0;
  for (int rj = 0; rj < n; ++rj) {
    const GridFn shat = sys.atom_spectrum(index_at(rj));
    for (int rk = 0; rk < n; ++rk) {
      const Complex entry = pair_bilinear(shat, jg[rk]) / sys.weights[rj];
      const Complex expected = rj == rk ? Complex(1.0) : Complex(0.0);
      dev = std::max(dev, std::abs(entry - expected));
    }
  }
  return dev;
}

DecayCheck sample_decay_check(const BandlimitedFn& f, double p, int J) {
  if (J < 1) throw std::invalid_argument("sample_decay_check: J must be >= 1");
  if (!f.spectrum.has_derivative())
    throw std::invalid_argument("sample_decay_check: unsupported spectrum (no derivative)");

  DecayCheck out;
  out.boundary = std::abs(f.spectrum.value(0.5) - f.spectrum.value(-0.5));

  GridFn deriv(f.grid, CVec(f.grid->order()));
  for (int i = 0; i < f.grid->order(); ++i)
    deriv.values[i] = f.spectrum.derivative(f.grid->nodes[i]);
  out.deriv_l1 = l1_norm(deriv);
  out.deriv_lp = lp_norm(deriv, p);

  const double numer = (out.boundary + out.deriv_l1) / (2.0 * kPi);
  out.C_p = out.deriv_lp > 0.0 ? std::pow(numer / out.deriv_lp, p) : 0.0;

  out.all_within = true;
  for (int j = 1; j <= J; ++j) {
    for (int sgn : {+1, -1}) {
      const int jj = sgn * j;
      out.js.push_back(jj);
      const double lhs = std::pow(std::abs(bandlimited_eval(f, jj)), p);
      const double rhs = std::pow(numer / std::abs(jj), p);
      out.lhs.push_back(lhs);
      out.rhs.push_back(rhs);
      if (lhs > rhs + 1e-18) out.all_within = false;
    }
  }
  return out;
}

}  // namespace sipsamp
