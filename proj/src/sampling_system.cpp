#include "sipsamp/sampling_system.hpp"

#include <stdexcept>

namespace sipsamp {

GridFn SamplingSystem::atom_spectrum(int j) const {
  const auto& sp = atoms[rank_of(j)].spectrum;
  if (!sp) throw std::invalid_argument("SamplingSystem: atom has no spectrum");
  GridFn out(grid, CVec(grid->order()));
  for (int i = 0; i < grid->order(); ++i) out.values[i] = sp(grid->nodes[i]);
  return out;
}

void SamplingSystem::validate() const {
  const int n = window_size(half_width);
  if (static_cast<int>(atoms.size()) != n || static_cast<int>(nodes.size()) != n ||
      static_cast<int>(weights.size()) != n)
    throw std::invalid_argument("SamplingSystem: size mismatch with half_width");
  for (int r = 0; r < n; ++r)
    if (weights[r] == Complex(0.0))
      throw std::invalid_argument("SamplingSystem: weights must be nonzero");
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      if (nodes[r] == nodes[s])
        throw std::invalid_argument("SamplingSystem: nodes must be pairwise distinct");
}

SamplingSystem make_sinc_system(int N, Exponent e, GridPtr grid, Complex uniform_weight,
                                const std::map<int, double>& node_shifts) {
  if (N < 0) throw std::invalid_argument("make_sinc_system: N must be >= 0");
  if (uniform_weight == Complex(0.0))
    throw std::invalid_argument("make_sinc_system: weight must be nonzero");

  SamplingSystem sys;
  sys.half_width = N;
  sys.exponent = e;
  sys.grid = std::move(grid);
  const int n = window_size(N);
  sys.atoms.resize(n);
  sys.nodes.resize(n);
  sys.weights = CVec::Constant(n, uniform_weight);

  for (int r = 0; r < n; ++r) {
    const int j = index_at(r);
    const Complex a = uniform_weight;
    sys.atoms[r].eval = [j, a](double t) { return a * sinc(t - j); };
    sys.atoms[r].spectrum = [j, a](double w) {
      const double ph = -2.0 * kPi * j * w;
      return a * Complex(std::cos(ph), std::sin(ph));
    };
    double tj = static_cast<double>(j);
    if (auto it = node_shifts.find(j); it != node_shifts.end()) tj += it->second;
    sys.nodes[r] = tj;
  }
  sys.validate();
  return sys;
}

CVec sample_at_nodes(const SamplingSystem& sys, const BandlimitedFn& f) {
  const int n = window_size(sys.half_width);
  CVec out(n);
  for (int r = 0; r < n; ++r) out[r] = bandlimited_eval(f, sys.nodes[r]);
  return out;
}

}  // namespace sipsamp
