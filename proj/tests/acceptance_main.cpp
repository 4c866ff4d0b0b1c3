// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "sipsamp/report_json.hpp"
#include "sipsamp/rng.hpp"
#include "sipsamp/verifier.hpp"

using namespace sipsamp;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s]: %s  (%s)\n", id, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

CoeffSeq random_unit_seq(Rng& rng, int N, double p) {
  CoeffSeq c(N, Exponent::from_p(p));
  c.entries = complex_gaussian_vector(rng, window_size(N));
  c.entries /= lp_norm(c, p);
  return c;
}

// 1. Kernel identity on a 41x41 lattice, every p, under 10 s.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const GridPtr grid = make_grid(16, 8);
  double dev = 0.0;
  for (const double p : {1.5, 2.0, 3.0, 4.0}) {
    const Kernel G = kernel_G(p, KernelBackend::Quadrature, grid);
    for (int i = 0; i < 41; ++i)
      for (int j = 0; j < 41; ++j) {
        const double s = -5.0 + 10.0 * i / 40.0;
        const double t = -5.0 + 10.0 * j / 40.0;
        dev = std::max(dev, std::abs(G(s, t) - Complex(sinc(t - s))));
      }
  }
  const double secs = seconds_since(t0);
  report(1, "kernel identity", dev <= 1e-9 && secs < 10.0,
         "max dev " + fmt(dev) + ", " + fmt(secs) + " s");
}

// 2. s.i.p. axioms on 1000 seeded pairs per p.
void criterion2() {
  double worst = 0.0;
  bool pass = true;
  for (const double p : {1.5, 2.0, 3.0, 4.0}) {
    Rng rng(1234);
    for (int trial = 0; trial < 1000; ++trial) {
      const CoeffSeq c = random_unit_seq(rng, 8, p);
      const CoeffSeq d = random_unit_seq(rng, 8, p);
      const CoeffSeq c2 = random_unit_seq(rng, 8, p);
      const Complex alpha = rng.cgaussian();

      CoeffSeq lin(8, c.exponent);
      lin.entries = alpha * c.entries + c2.entries;
      const double e1 = std::abs(sip(lin, d, p) - (alpha * sip(c, d, p) + sip(c2, d, p)));

      CoeffSeq ad(8, c.exponent);
      ad.entries = alpha * d.entries;
      const double e2 = std::abs(sip(c, ad, p) - std::conj(alpha) * sip(c, d, p));

      const double pos = sip(d, d, p).real();
      const double cs = std::norm(sip(c, d, p)) - sip(c, c, p).real() * pos;

      worst = std::max({worst, e1, e2, cs});
      if (e1 > 1e-10 || e2 > 1e-10 || pos <= 0.0 || cs > 1e-10) pass = false;
    }
  }
  report(2, "s.i.p. axioms", pass, "worst violation " + fmt(worst));
}

// 3. Duality-map isometry on 1000 random sequences per p.
void criterion3() {
  double worst = 0.0;
  for (const double p : {1.5, 2.0, 3.0, 4.0}) {
    const double q = Exponent::from_p(p).q;
    Rng rng(4321);
    for (int trial = 0; trial < 1000; ++trial) {
      CoeffSeq d(8, Exponent::from_p(p));
      d.entries = complex_gaussian_vector(rng, window_size(8));
      worst = std::max(worst, std::abs(lp_norm(duality_map(d, p), q) - lp_norm(d, p)));
    }
  }
  report(3, "duality-map isometry", worst <= 1e-12, "worst gap " + fmt(worst));
}

// 4. Hilbert-case exactness: p = 2, N = 32, 2000 trials.
void criterion4() {
  const int N = 32;
  const GridPtr grid = make_grid(16, std::max(8, N));
  const SamplingSystem sys = make_sinc_system(N, Exponent::from_p(2.0), grid);

  const double interp = check_interpolation(sys);
  const double sm = biorth_matrix_SM(sys);
  const Kernel G = kernel_G(2.0, KernelBackend::Quadrature, grid);
  const double sg = check_sampling_basis(sys, G, 2.0);

  const auto bessel = bessel_bound(sys, 2.0, 2000, 42);
  const auto frame = frame_bounds_M(sys, 2.0, 2000, 42);
  const auto riesz = riesz_bounds_S(sys, 2.0, 2000, 42);

  bool bounds_ok = true;
  for (const auto& b : {bessel, frame, riesz})
    bounds_ok = bounds_ok && b.lower_A >= 1.0 - 1e-6 && b.upper_B <= 1.0 + 1e-6 &&
                b.lower_A <= b.upper_B;

  const bool pass = interp == 0.0 && sm <= 1e-9 && sg <= 1e-9 && bounds_ok;
  report(4, "Hilbert-case exactness", pass,
         "interp " + fmt(interp) + ", biorth " + fmt(std::max(sm, sg)) + ", bounds [" +
             fmt(std::min({bessel.lower_A, frame.lower_A, riesz.lower_A})) + ", " +
             fmt(std::max({bessel.upper_B, frame.upper_B, riesz.upper_B})) + "]");
}

// 5. Converse-theorem formulas, full j sweep, halving check under doubling N.
void criterion5() {
  const std::vector<double> lattice = {0.1, 0.25, 0.5, 0.9, 3.3, -0.1, -0.25, -0.5, -0.9, -3.3};
  bool pass = true;
  double worst = 0.0;

  auto sweep = [&](double p, int N, double& f3, double& f4) {
    const GridPtr grid = make_grid(16, std::max(8, N));
    const SamplingSystem sys = make_sinc_system(N, Exponent::from_p(p), grid);
    f3 = f4 = 0.0;
    for (int j = -N; j <= N; ++j) {
      f3 = std::max(f3, check_formula3(sys, j, lattice));
      f4 = std::max(f4, check_formula4(sys, j, lattice, p));
    }
  };

  {  // p = 2, N = 32: hard 1e-7
    double f3, f4;
    sweep(2.0, 32, f3, f4);
    worst = std::max({worst, f3, f4});
    if (f3 > 1e-7 || f4 > 1e-7) pass = false;
  }
  for (const double p : {3.0, 4.0}) {
    const double q = Exponent::from_p(p).q;
    double f3a, f4a, f3b, f4b;
    sweep(p, 32, f3a, f4a);
    sweep(p, 64, f3b, f4b);
    double tail = 0.0;  // observed l_q tail scale at the outermost lattice point
    for (const double t : lattice) tail = std::max(tail, tail_bound(t, 32, q));
    const double tol = std::max(1e-6, tail);
    worst = std::max({worst, f3a, f4a, f3b, f4b});
    if (f3a > tol || f4a > tol) pass = false;
    if (f3b > f3a + 1e-12 || f4b > f4a + 1e-12) pass = false;  // nonincreasing under doubling
  }
  report(5, "converse formulas", pass, "max dev " + fmt(worst));
}

// 6. Reconstruction error against the example bound, monotone in N.
void criterion6() {
  const GridPtr grid = make_grid(16, 64);
  const std::vector<double> ts = {0.1, 0.25, 0.5, 0.9, 3.3};
  const std::vector<int> ns = {4, 8, 16, 32, 64};
  bool pass = true;
  double worst_margin = -std::numeric_limits<double>::infinity();

  for (const double p : {2.0, 4.0}) {
    const Exponent e = Exponent::from_p(p);
    for (const std::string name : {"const", "shift:0.5", "coswin"}) {
      const BandlimitedFn f = make_bandlimited(Spectrum::from_name(name), e, grid);
      const double fhat_norm = spectrum_norm(f, p);
      for (const double t : ts) {
        double prev = std::numeric_limits<double>::infinity();
        for (const int N : ns) {
          const SamplingSystem sys = make_sinc_system(N, e, grid);
          const CVec samples = sample_at_nodes(sys, f);
          const Complex approx = reconstruct(sys, samples, t).value;
          const double err = std::abs(approx - f.spectrum.time_eval(t));
          const double bound = fhat_norm * tail_factor(t, N, e.q, grid);
          if (err > bound + 1e-13) pass = false;
          if (err > prev + 1e-13) pass = false;
          worst_margin = std::max(worst_margin, err - bound);
          prev = err;
        }
      }
    }
  }
  report(6, "reconstruction bound", pass, "worst err-bound margin " + fmt(worst_margin));
}

// 7. Sample-decay bound for coswin at p in {2, 3}, 1 <= |j| <= 50.
void criterion7() {
  const GridPtr grid = make_grid(16, 64);
  bool pass = true;
  double c_report = 0.0;
  for (const double p : {2.0, 3.0}) {
    const BandlimitedFn f = make_bandlimited(Spectrum::coswin(), Exponent::from_p(p), grid);
    const auto dc = sample_decay_check(f, p, 50);
    pass = pass && dc.all_within && dc.C_p > 0.0;
    c_report = dc.C_p;
  }
  report(7, "sample-decay bound", pass, "C(3) = " + fmt(c_report));
}

// 8. Sampling-identity oracle equivalence on 200 random functions.
void criterion8() {
  const int N = 16;
  const GridPtr grid = make_grid(16, std::max(8, N));
  bool pass = true;
  double worst = 0.0;
  for (const double p : {2.0, 3.0, 4.0}) {
    const SamplingSystem sys = make_sinc_system(N, Exponent::from_p(p), grid);
    Rng rng(777);
    for (int trial = 0; trial < 200; ++trial) {
      CoeffSeq c(N, sys.exponent);
      c.entries = complex_gaussian_vector(rng, window_size(N));
      for (int j = -N; j <= N; ++j) {
        const Complex lhs = sip_samp_Mj(sys, c, j);
        Complex f_tj = 0.0;
        for (int r = 0; r < c.size(); ++r)
          f_tj += c.entries[r] * sys.atoms[r].eval(sys.node(j));
        const double gap = std::abs(lhs - f_tj / sys.weight(j));
        worst = std::max(worst, gap);
        if (gap > 1e-9) pass = false;
      }
    }
  }
  report(8, "sampling identity", pass, "worst gap " + fmt(worst));
}

// 9. Determinism of the verification report serialization.
void criterion9() {
  VerifyConfig cfg;
  cfg.p = 4.0;
  cfg.half_width = 16;
  cfg.trials = 200;
  cfg.seed = 42;
  const std::string a = to_json(run_verification(cfg)).dump(2);
  const std::string b = to_json(run_verification(cfg)).dump(2);
  report(9, "report determinism", a == b, a == b ? "byte-identical" : "mismatch");
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("acceptance: %s (%d failure%s, %.1f s total)\n", g_failures == 0 ? "PASS" : "FAIL",
              g_failures, g_failures == 1 ? "" : "s", seconds_since(t0));
  return g_failures == 0 ? 0 : 1;
}
