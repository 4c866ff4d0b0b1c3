#pragma once

// The triple ({S_j}, {t_j}, {a_j}) at truncation |j| <= N, the object the
// sampling checks and the converse-theorem verifier operate on.

#include <functional>
#include <map>
#include <vector>

#include "sipsamp/funcspace.hpp"

namespace sipsamp {

struct SamplingAtom {
  std::function<Complex(double)> eval;      // S_j(t)
  std::function<Complex(double)> spectrum;  // Shat_j(w); empty if unknown
};

struct SamplingSystem {
  int half_width = 0;               // N
  Exponent exponent;                // (p, q); the duality star of phi uses q
  std::vector<SamplingAtom> atoms;  // rank order
  std::vector<double> nodes;        // t_j, rank order, pairwise distinct
  CVec weights;                     // a_j, rank order, all nonzero
  GridPtr grid;                     // backend for spectrum-side pairings

  const SamplingAtom& atom(int j) const { return atoms[rank_of(j)]; }
  double node(int j) const { return nodes[rank_of(j)]; }
  Complex weight(int j) const { return weights[rank_of(j)]; }

  Complex atom_eval(int j, double t) const { return atoms[rank_of(j)].eval(t); }

  GridFn atom_spectrum(int j) const;

  void validate() const;  // nonzero weights, distinct nodes, sizes
};

/// The canonical band-limited system: S_j(t) = a_j sinc(t - j) centered at
/// the integers, Shat_j(w) = a_j exp(-2 pi i j w), nodes t_j = j + shift_j,
/// weights a_j.  With no shifts and any uniform weight the interpolation
/// condition S_j(t_k) = a_j delta_jk holds exactly.  Node shifts move the
/// nodes only (the atoms stay put), which breaks interpolation on purpose.
SamplingSystem make_sinc_system(int N, Exponent e, GridPtr grid,
                                Complex uniform_weight = Complex(1.0),
                                const std::map<int, double>& node_shifts = {});

/// Samples {f(t_j)}_{|j|<=N} in rank order, via quadrature evaluation.
CVec sample_at_nodes(const SamplingSystem& sys, const BandlimitedFn& f);

}  // namespace sipsamp
