#include "sipsamp/funcspace.hpp"

#include <stdexcept>

namespace sipsamp {

bool same_grid(const GridFn& a, const GridFn& b) {
  if (a.grid == b.grid) return true;
  if (!a.grid || !b.grid) return false;
  return a.grid->order() == b.grid->order() && a.grid->nodes == b.grid->nodes;
}

void require_same_grid(const GridFn& a, const GridFn& b) {
  if (!same_grid(a, b)) throw std::invalid_argument("GridFn: grid mismatch");
}

double lp_norm(const GridFn& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm: p must be >= 1");
  if (!f.finite()) throw std::invalid_argument("GridFn: non-finite value");
  const double m = f.values.cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (int i = 0; i < f.size(); ++i)
    s += f.grid->weights[i] * std::pow(std::abs(f.values[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double l1_norm(const GridFn& f) {
  double s = 0.0;
  for (int i = 0; i < f.size(); ++i) s += f.grid->weights[i] * std::abs(f.values[i]);
  return s;
}

GridFn duality_map(const GridFn& g, double p) {
  Exponent::from_p(p);
  if (!g.finite()) throw std::invalid_argument("GridFn: non-finite value");
  GridFn out(g.grid, CVec::Zero(g.size()));
  const double norm = lp_norm(g, p);
  if (norm == 0.0) return out;
  const double denom = std::pow(norm, p - 2.0);
  for (int i = 0; i < g.size(); ++i) {
    const Complex z = g.values[i];
    const double a = std::abs(z);
    out.values[i] = a == 0.0 ? Complex(0.0) : std::pow(a, p - 1.0) * (std::conj(z) / a) / denom;
  }
  return out;
}

Complex pair_bilinear(const GridFn& f, const GridFn& h) {
  require_same_grid(f, h);
  Complex s = 0.0;
  for (int i = 0; i < f.size(); ++i) s += f.grid->weights[i] * f.values[i] * h.values[i];
  return s;
}

Complex sip(const GridFn& f, const GridFn& g, double p) {
  require_same_grid(f, g);
  return pair_bilinear(f, duality_map(g, p));
}

GridFn phi_spectrum(double t, const GridPtr& grid) {
  GridFn out(grid, CVec(grid->order()));
  for (int i = 0; i < grid->order(); ++i) {
    const double ph = -2.0 * kPi * t * grid->nodes[i];
    out.values[i] = Complex(std::cos(ph), std::sin(ph));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

Spectrum Spectrum::constant(Complex amplitude) {
  Spectrum s;
  s.kind_ = Kind::Constant;
  s.amp_ = amplitude;
  s.name_ = "const";
  return s;
}

Spectrum Spectrum::shift(double t0) {
  Spectrum s;
  s.kind_ = Kind::Shift;
  s.t0_ = t0;
  s.name_ = "shift:" + std::to_string(t0);
  return s;
}

Spectrum Spectrum::coswin() {
  Spectrum s;
  s.kind_ = Kind::CosWindow;
  s.name_ = "coswin";
  return s;
}

Spectrum Spectrum::from_grid(GridFn data, std::string name) {
  Spectrum s;
  s.kind_ = Kind::Tabulated;
  s.data_ = std::move(data);
  s.name_ = std::move(name);
  return s;
}

Spectrum Spectrum::from_name(const std::string& name) {
  if (name == "const") return constant();
  if (name == "coswin") return coswin();
  if (name.rfind("shift:", 0) == 0) {
    try {
      return shift(std::stod(name.substr(6)));
    } catch (const std::exception&) {
      throw std::invalid_argument("Spectrum: bad shift parameter in '" + name + "'");
    }
  }
  throw std::invalid_argument("Spectrum: unknown name '" + name + "'");
}

const GridFn& Spectrum::data() const {
  if (!data_) throw std::logic_error("Spectrum: no tabulated data");
  return *data_;
}

Complex Spectrum::value(double omega) const {
  switch (kind_) {
    case Kind::Constant: return amp_;
    case Kind::Shift: {
      const double ph = 2.0 * kPi * t0_ * omega;
      return Complex(std::cos(ph), std::sin(ph));
    }
    case Kind::CosWindow: return Complex(std::cos(kPi * omega), 0.0);
    case Kind::Tabulated:
      throw std::invalid_argument("Spectrum: tabulated spectra have no pointwise form");
  }
  return {};
}

Complex Spectrum::derivative(double omega) const {
  switch (kind_) {
    case Kind::Constant: return Complex(0.0);
    case Kind::Shift: return Complex(0.0, 2.0 * kPi * t0_) * value(omega);
    case Kind::CosWindow: return Complex(-kPi * std::sin(kPi * omega), 0.0);
    case Kind::Tabulated:
      throw std::invalid_argument("Spectrum: unsupported spectrum (no derivative)");
  }
  return {};
}

Complex Spectrum::time_eval(double t) const {
  switch (kind_) {
    case Kind::Constant: return amp_ * sinc(t);
    case Kind::Shift: return Complex(sinc(t + t0_), 0.0);
    case Kind::CosWindow:
      // (sinc(t+1/2) + sinc(t-1/2))/2 = (2/pi) cos(pi t) / (1 - 4 t^2)
      return Complex(0.5 * (sinc(t + 0.5) + sinc(t - 0.5)), 0.0);
    case Kind::Tabulated:
      throw std::invalid_argument("Spectrum: no closed-form time evaluation");
  }
  return {};
}

GridFn spectrum_on_grid(const Spectrum& s, const GridPtr& grid) {
  if (s.tabulated()) {
    GridFn probe(grid, CVec::Zero(grid->order()));
    if (!same_grid(s.data(), probe))
      throw std::invalid_argument("Spectrum: tabulated data lives on a different grid");
    return s.data();
  }
  GridFn out(grid, CVec(grid->order()));
  for (int i = 0; i < grid->order(); ++i) out.values[i] = s.value(grid->nodes[i]);
  return out;
}

BandlimitedFn make_bandlimited(Spectrum s, Exponent e, GridPtr grid) {
  return BandlimitedFn{std::move(s), e, std::move(grid)};
}

Complex bandlimited_eval(const BandlimitedFn& f, double t) {
  const GridFn fhat = spectrum_on_grid(f.spectrum, f.grid);
  Complex s = 0.0;
  for (int i = 0; i < fhat.size(); ++i) {
    const double ph = 2.0 * kPi * t * f.grid->nodes[i];
    s += f.grid->weights[i] * fhat.values[i] * Complex(std::cos(ph), std::sin(ph));
  }
  return s;
}

double spectrum_norm(const BandlimitedFn& f, double p) {
  return lp_norm(spectrum_on_grid(f.spectrum, f.grid), p);
}

}  // namespace sipsamp
