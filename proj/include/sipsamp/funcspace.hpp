#pragma once

// Quadrature-discretized L_p(I) on I = [-1/2, 1/2]: norms, semi-inner
// product, closed-form spectra, and band-limited evaluation.  A band-limited
// function is stored by its spectrum on I; the isometry ||f||_{B_p} =
// ||fhat||_{L_p(I)} makes every B_p quantity an L_p(I) quadrature.

#include <optional>
#include <string>

#include "sipsamp/core.hpp"
#include "sipsamp/quadrature.hpp"

namespace sipsamp {

/// Complex function values on a quadrature grid over I.
struct GridFn {
  GridPtr grid;
  CVec values;

  GridFn() = default;
  GridFn(GridPtr g, CVec v) : grid(std::move(g)), values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }
  bool finite() const { return values.allFinite(); }
};

bool same_grid(const GridFn& a, const GridFn& b);
void require_same_grid(const GridFn& a, const GridFn& b);

/// Weighted p-norm (sum_m w_m |f_m|^p)^(1/p).
double lp_norm(const GridFn& f, double p);

/// Weighted L_1 norm, sum_m w_m |f_m|.
double l1_norm(const GridFn& f);

/// Pointwise normalized duality mapping: g* = conj(g)|g|^(p-2) / ||g||_p^(p-2).
GridFn duality_map(const GridFn& g, double p);

/// Bilinear pairing (f, h) = sum_m w_m f_m h_m.
Complex pair_bilinear(const GridFn& f, const GridFn& h);

/// Semi-inner product [f, g]_p = integral of f conj(g)|g|^(p-2) / ||g||_p^(p-2).
Complex sip(const GridFn& f, const GridFn& g, double p);

/// Spectrum of the kernel section at t: w -> exp(-2 pi i t w).  This is the
/// feature map of the band-limited space; pairing a spectrum against it in
/// any [.,.]_p recovers the time-domain value at t.
GridFn phi_spectrum(double t, const GridPtr& grid);

/// Closed-form or tabulated spectrum on I.  Closed forms carry analytic
/// derivatives and time-domain evaluators used as test oracles.
class Spectrum {
 public:
  static Spectrum constant(Complex amplitude = Complex(1.0));
  static Spectrum shift(double t0);  // w -> exp(2 pi i t0 w); time domain sinc(t + t0)
  static Spectrum coswin();          // w -> cos(pi w)
  static Spectrum from_grid(GridFn data, std::string name = "csv");

  /// Parse "const", "shift:T0", "coswin".
  static Spectrum from_name(const std::string& name);

  bool tabulated() const { return kind_ == Kind::Tabulated; }
  const GridFn& data() const;

  Complex value(double omega) const;

  bool has_derivative() const { return kind_ != Kind::Tabulated; }
  Complex derivative(double omega) const;

  bool has_time_form() const { return kind_ != Kind::Tabulated; }
  Complex time_eval(double t) const;

  const std::string& name() const { return name_; }

 private:
  enum class Kind { Constant, Shift, CosWindow, Tabulated };
  Kind kind_ = Kind::Constant;
  Complex amp_{1.0, 0.0};
  double t0_ = 0.0;
  std::optional<GridFn> data_;
  std::string name_ = "const";
};

/// Evaluate a spectrum at the grid nodes.  Tabulated spectra must already
/// live on the requested grid.
GridFn spectrum_on_grid(const Spectrum& s, const GridPtr& grid);

/// Band-limited function, represented spectrum-side.
struct BandlimitedFn {
  Spectrum spectrum;
  Exponent exponent;
  GridPtr grid;
};

BandlimitedFn make_bandlimited(Spectrum s, Exponent e, GridPtr grid);

/// f(t) = integral of fhat(w) exp(2 pi i t w) dw, by quadrature.
Complex bandlimited_eval(const BandlimitedFn& f, double t);

/// ||fhat||_{L_p(I)} of the stored spectrum (= ||f||_{B_p}).
double spectrum_norm(const BandlimitedFn& f, double p);

}  // namespace sipsamp
