#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>

#include "sipsamp/funcspace.hpp"
#include "sipsamp/rng.hpp"

using namespace sipsamp;

namespace {

GridFn const_fn(const GridPtr& g, Complex v) { return GridFn(g, CVec::Constant(g->order(), v)); }

GridFn from_lambda(const GridPtr& g, const std::function<Complex(double)>& f) {
  GridFn out(g, CVec(g->order()));
  for (int i = 0; i < g->order(); ++i) out.values[i] = f(g->nodes[i]);
  return out;
}

// Smooth random trig-polynomial spectrum for the axiom suite.
GridFn random_smooth(Rng& rng, const GridPtr& g, int degree = 5) {
  CVec coef = complex_gaussian_vector(rng, 2 * degree + 1);
  return from_lambda(g, [&](double w) {
    Complex s = 0.0;
    for (int k = -degree; k <= degree; ++k) {
      const double ph = -2.0 * kPi * k * w;
      s += coef[k + degree] * Complex(std::cos(ph), std::sin(ph));
    }
    return s;
  });
}

}  // namespace

TEST_CASE("grid construction and exactness") {
  CHECK_THROWS_AS(make_grid(1), std::invalid_argument);

  // 1 panel, 2 nodes: integrates constants exactly
  const GridPtr tiny = make_grid(2, 1);
  CHECK(tiny->order() == 2);
  CHECK(std::abs(tiny->weights.sum() - 1.0) < 1e-15);

  const GridPtr g = make_grid(16, 8);
  CHECK(g->order() == 128);
  CHECK(std::abs(g->weights.sum() - 1.0) < 1e-12);
  CHECK(g->nodes.minCoeff() > -0.5);
  CHECK(g->nodes.maxCoeff() < 0.5);
  CHECK((g->weights.array() > 0.0).all());

  // integral of w over I vanishes by symmetry
  double m1 = 0.0;
  for (int i = 0; i < g->order(); ++i) m1 += g->weights[i] * g->nodes[i];
  CHECK(std::abs(m1) < 1e-16);

  // integral of exp(2 pi i w) = sinc(1) = 0
  Complex osc = 0.0;
  for (int i = 0; i < g->order(); ++i) {
    const double ph = 2.0 * kPi * g->nodes[i];
    osc += g->weights[i] * Complex(std::cos(ph), std::sin(ph));
  }
  CHECK(std::abs(osc) < 1e-14);

  // Gauss exactness: 4 nodes on one panel integrate degree <= 7 exactly
  // (x^6 -> 1/448) but not degree 8 (x^8 -> 1/2304)
  const GridPtr g4 = make_grid(4, 1);
  double m6 = 0.0, m8 = 0.0;
  for (int i = 0; i < g4->order(); ++i) {
    m6 += g4->weights[i] * std::pow(g4->nodes[i], 6);
    m8 += g4->weights[i] * std::pow(g4->nodes[i], 8);
  }
  CHECK(m6 == doctest::Approx(1.0 / 448.0).epsilon(1e-14));
  CHECK(std::abs(m8 - 1.0 / 2304.0) > 1e-9);
}

TEST_CASE("Lp norms of grid functions") {
  const GridPtr g = make_grid(16, 8);
  for (const double p : {1.5, 2.0, 3.0, 4.0})
    CHECK(lp_norm(const_fn(g, 1.0), p) == doctest::Approx(1.0).epsilon(1e-14));

  // unimodular integrand: |e^{2 pi i t w}| = 1
  const GridFn mod = from_lambda(g, [](double w) {
    const double ph = 2.0 * kPi * 3.7 * w;
    return Complex(std::cos(ph), std::sin(ph));
  });
  CHECK(lp_norm(mod, 3.0) == doctest::Approx(1.0).epsilon(1e-14));

  // f(w) = w, p = 2 -> sqrt(1/12)
  const GridFn lin = from_lambda(g, [](double w) { return Complex(w, 0); });
  CHECK(lp_norm(lin, 2.0) == doctest::Approx(0.28867513459481288).epsilon(1e-14));
}

TEST_CASE("sip on grid functions") {
  const GridPtr g = make_grid(16, 8);

  // norm compatibility
  Rng rng(11);
  for (const double p : {1.5, 2.0, 3.0, 4.0}) {
    const GridFn f = random_smooth(rng, g);
    const double n = lp_norm(f, p);
    CHECK(std::abs(sip(f, f, p) - Complex(n * n)) < 1e-10 * (1 + n * n));
  }

  // p=2 exponentials reproduce sinc(s - t)
  const double s = 1.3, t = -0.4;
  const GridFn fs = from_lambda(g, [&](double w) {
    const double ph = 2.0 * kPi * s * w;
    return Complex(std::cos(ph), std::sin(ph));
  });
  const GridFn ft = from_lambda(g, [&](double w) {
    const double ph = 2.0 * kPi * t * w;
    return Complex(std::cos(ph), std::sin(ph));
  });
  CHECK(std::abs(sip(fs, ft, 2.0) - Complex(sinc(s - t))) < 1e-12);

  // odd integrand vanishes at p = 4
  const GridFn one = const_fn(g, 1.0);
  const GridFn lin = from_lambda(g, [](double w) { return Complex(w, 0); });
  CHECK(std::abs(sip(one, lin, 4.0)) < 1e-14);

  // grid mismatch is an error
  const GridPtr g2 = make_grid(8, 4);
  CHECK_THROWS_AS(sip(const_fn(g, 1.0), const_fn(g2, 1.0), 2.0), std::invalid_argument);
}

TEST_CASE("sip axioms on random smooth grid functions") {
  const GridPtr g = make_grid(12, 6);
  for (const double p : {1.5, 2.0, 3.0, 4.0}) {
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
      GridFn f = random_smooth(rng, g);
      GridFn h = random_smooth(rng, g);
      f.values /= lp_norm(f, p);
      h.values /= lp_norm(h, p);
      const Complex alpha = rng.cgaussian();

      GridFn lin(g, alpha * f.values + h.values);
      CHECK(std::abs(sip(lin, h, p) - (alpha * sip(f, h, p) + sip(h, h, p))) < 1e-11);

      GridFn ah(g, alpha * h.values);
      CHECK(std::abs(sip(f, ah, p) - std::conj(alpha) * sip(f, h, p)) < 1e-11);

      CHECK(sip(h, h, p).real() > 0.0);
      CHECK(std::norm(sip(f, h, p)) <= sip(f, f, p).real() * sip(h, h, p).real() + 1e-10);

      // duality-map isometry on the grid
      const double q = Exponent::from_p(p).q;
      CHECK(std::abs(lp_norm(duality_map(h, p), q) - lp_norm(h, p)) < 1e-12);
    }
  }
}

TEST_CASE("closed-form spectra registry") {
  CHECK(Spectrum::from_name("const").name() == "const");
  CHECK(Spectrum::from_name("coswin").name() == "coswin");
  CHECK(Spectrum::from_name("shift:0.5").value(0.25).real() ==
        doctest::Approx(std::cos(2 * kPi * 0.5 * 0.25)));
  CHECK_THROWS_AS(Spectrum::from_name("nosuch"), std::invalid_argument);
  CHECK_THROWS_AS(Spectrum::from_name("shift:xyz"), std::invalid_argument);
}

TEST_CASE("tabulated spectra are pinned to their grid") {
  const GridPtr g = make_grid(16, 8);
  const GridPtr other = make_grid(8, 4);
  GridFn data(g, CVec::Constant(g->order(), Complex(1.0)));
  const Spectrum s = Spectrum::from_grid(data);
  CHECK(spectrum_on_grid(s, g).values == data.values);
  CHECK_THROWS_AS(spectrum_on_grid(s, other), std::invalid_argument);
  CHECK_THROWS_AS(s.value(0.0), std::invalid_argument);
  CHECK(!s.has_time_form());
}

TEST_CASE("bandlimited evaluation") {
  const GridPtr g = make_grid(16, 8);
  const Exponent e2 = Exponent::from_p(2.0);

  // fhat = 1 -> f = sinc
  const BandlimitedFn f1 = make_bandlimited(Spectrum::constant(), e2, g);
  CHECK(std::abs(bandlimited_eval(f1, 0.0) - Complex(1.0)) < 1e-14);
  for (const double t : {0.3, 1.7, -2.2, 5.5})
    CHECK(std::abs(bandlimited_eval(f1, t) - Complex(sinc(t))) < 1e-13);
  for (const int k : {1, -1, 3, -7})
    CHECK(std::abs(bandlimited_eval(f1, k)) < 1e-14);

  // fhat(w) = exp(2 pi i t0 w) -> f(t) = sinc(t + t0)
  const BandlimitedFn fs = make_bandlimited(Spectrum::shift(0.5), e2, g);
  for (const double t : {0.2, -1.3, 4.4})
    CHECK(std::abs(bandlimited_eval(fs, t) - Complex(sinc(t + 0.5))) < 1e-13);

  // coswin closed form agrees with quadrature, including near t = 1/2
  const BandlimitedFn fc = make_bandlimited(Spectrum::coswin(), e2, g);
  for (const double t : {0.0, 0.5, 0.4999999, 2.25, -3.1})
    CHECK(std::abs(bandlimited_eval(fc, t) - fc.spectrum.time_eval(t)) < 1e-13);
}

TEST_CASE("quadrature consistency under grid doubling") {
  const GridPtr g1 = make_grid(16, 8);
  const GridPtr g2 = make_grid(32, 8);
  const Exponent e2 = Exponent::from_p(2.0);
  for (const std::string name : {"const", "shift:0.5", "coswin"}) {
    const Spectrum s = Spectrum::from_name(name);
    for (const double t : {0.1, 5.0, 12.5, 19.75, -20.0}) {
      const Complex a = bandlimited_eval(make_bandlimited(s, e2, g1), t);
      const Complex b = bandlimited_eval(make_bandlimited(s, e2, g2), t);
      CHECK(std::abs(a - b) < 1e-10);
    }
    for (const double p : {1.5, 3.0}) {
      const Complex a = sip(spectrum_on_grid(s, g1), phi_spectrum(7.5, g1), p);
      const Complex b = sip(spectrum_on_grid(s, g2), phi_spectrum(7.5, g2), p);
      CHECK(std::abs(a - b) < 1e-10);
    }
  }
}

TEST_CASE("reproducing property through the feature map") {
  const GridPtr g = make_grid(16, 8);
  for (const double p : {1.5, 2.0, 3.0, 4.0}) {
    const Exponent e = Exponent::from_p(p);
    for (const std::string name : {"shift:0.25", "coswin"}) {
      const BandlimitedFn f = make_bandlimited(Spectrum::from_name(name), e, g);
      const GridFn fhat = spectrum_on_grid(f.spectrum, g);
      for (const double t : {0.0, 0.3, -1.9, 6.2}) {
        const Complex lhs = sip(fhat, phi_spectrum(t, g), p);
        CHECK(std::abs(lhs - bandlimited_eval(f, t)) < 1e-9);
      }
    }
  }
}
