#pragma once

// Composite Gauss-Legendre quadrature on I = [-1/2, 1/2].

#include <memory>

#include "sipsamp/core.hpp"

namespace sipsamp {

struct Grid {
  RVec nodes;    // ascending, strictly inside (-1/2, 1/2)
  RVec weights;  // positive, summing to |I| = 1

  int order() const { return static_cast<int>(nodes.size()); }
};

using GridPtr = std::shared_ptr<const Grid>;

/// Composite Gauss-Legendre rule: `nodes_per_panel` points on each of
/// `panels` equal subintervals of I.  Exact for polynomials of degree
/// 2*nodes_per_panel - 1 per panel.  Default 8 panels x 16 nodes resolves
/// the oscillatory integrands exp(2 pi i t w), |t| <= 20, to ~1e-13;
/// increase `panels` proportionally for larger |t|.
GridPtr make_grid(int nodes_per_panel, int panels = 8);

/// Gauss-Legendre nodes/weights on [-1, 1] via the Golub-Welsch eigenvalue
/// method (symmetric tridiagonal Jacobi matrix).
void gauss_legendre(int n, RVec& nodes, RVec& weights);

}  // namespace sipsamp
