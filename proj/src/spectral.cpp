#include "synckit/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace synckit {

std::vector<double> symmetric_eigenvalues(std::vector<double> a,
                                          std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& {
    return a[i * n + j];
  };
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
    if (off < 1e-24 * double(n ? n : 1)) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (at(q, q) - at(p, p)) / (2 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1.0 / std::sqrt(t * t + 1);
        double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> adjacency_eigenvalues(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (Point u = 0; u < n; ++u)
    g.row(u).for_each([&](std::size_t v) { a[u * n + v] = 1.0; });
  return symmetric_eigenvalues(std::move(a), n);
}

HoffmanBound hoffman_coclique_bound(const Graph& g) {
  std::int64_t k = g.regular_degree();
  if (k < 0) throw PreconditionError("Hoffman bound needs a regular graph");
  if (k == 0) throw PreconditionError("Hoffman bound needs degree >= 1");
  auto eig = adjacency_eigenvalues(g);
  double lmin = eig.front();
  HoffmanBound b;
  b.value = double(g.order()) * (-lmin) / (double(k) - lmin);
  b.floor_guarded = std::int64_t(std::floor(b.value + 1e-6));
  return b;
}

}  // namespace synckit
