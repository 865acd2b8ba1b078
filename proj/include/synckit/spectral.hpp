#pragma once

#include <vector>

#include "synckit/graph.hpp"

namespace synckit {

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
// ascending order. Deterministic and dependency-free; adequate for n <= ~700.
// Converges to well below 1e-6 absolute error on adjacency matrices.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

std::vector<double> adjacency_eigenvalues(const Graph& g);

struct HoffmanBound {
  double value = 0;          // n * (-lambda_min) / (k - lambda_min)
  std::int64_t floor_guarded = 0;  // floor(value + 1e-6)
};

// Ratio bound on the independence number of a regular graph. Throws
// PreconditionError on irregular graphs or null graphs.
HoffmanBound hoffman_coclique_bound(const Graph& g);

}  // namespace synckit
