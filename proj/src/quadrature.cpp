#include "sipsamp/quadrature.hpp"

#include <stdexcept>

namespace sipsamp {

void gauss_legendre(int n, RVec& nodes, RVec& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  if (n == 1) {
    nodes = RVec::Zero(1);
    weights = RVec::Constant(1, 2.0);
    return;
  }
  // Jacobi matrix of the Legendre recurrence: off-diagonal
  // b_k = k / sqrt(4k^2 - 1), zero diagonal.
  RMat J = RMat::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = k / std::sqrt(4.0 * k * k - 1.0);
    J(k, k - 1) = b;
    J(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<RMat> es(J);
  nodes = es.eigenvalues();
  weights.resize(n);
  for (int k = 0; k < n; ++k) {
    const double v0 = es.eigenvectors()(0, k);
    weights[k] = 2.0 * v0 * v0;
  }
}

GridPtr make_grid(int nodes_per_panel, int panels) {
  if (nodes_per_panel < 2) throw std::invalid_argument("make_grid: order must be >= 2");
  if (panels < 1) throw std::invalid_argument("make_grid: panels must be >= 1");

  RVec x, w;
  gauss_legendre(nodes_per_panel, x, w);

  auto grid = std::make_shared<Grid>();
  const int m = nodes_per_panel * panels;
  grid->nodes.resize(m);
  grid->weights.resize(m);
  const double h = 1.0 / panels;  // panel width on [-1/2, 1/2]
  for (int p = 0; p < panels; ++p) {
    const double a = -0.5 + p * h;
    const double mid = a + 0.5 * h;
    for (int k = 0; k < nodes_per_panel; ++k) {
      grid->nodes[p * nodes_per_panel + k] = mid + 0.5 * h * x[k];
      grid->weights[p * nodes_per_panel + k] = 0.5 * h * w[k];
    }
  }
  return grid;
}

}  // namespace sipsamp
