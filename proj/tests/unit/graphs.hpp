#pragma once

#include <random>

#include "synckit/graph.hpp"

namespace testutil {

using synckit::Graph;
using synckit::Point;

// Kneser graph K(n,k): vertices are k-subsets in lexicographic order,
// adjacent iff disjoint. K(5,2) is the Petersen graph.
inline Graph kneser(std::size_t n, std::size_t k) {
  std::vector<std::vector<Point>> subsets;
  std::vector<Point> cur;
  std::function<void(Point)> gen = [&](Point start) {
    if (cur.size() == k) {
      subsets.push_back(cur);
      return;
    }
    for (Point i = start; i < n; ++i) {
      cur.push_back(i);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);
  Graph g(subsets.size());
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      bool disjoint = true;
      for (Point x : subsets[a])
        for (Point y : subsets[b])
          if (x == y) disjoint = false;
      if (disjoint) g.add_edge(Point(a), Point(b));
    }
  return g;
}

inline Graph petersen() { return kneser(5, 2); }

inline Graph cycle(std::size_t n) {
  Graph g(n);
  for (Point i = 0; i < n; ++i) g.add_edge(i, Point((i + 1) % n));
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  Graph g(n);
  for (Point i = 0; i < n; ++i)
    for (Point j = i + 1; j < n; ++j)
      if (dist(rng) < p) g.add_edge(i, j);
  return g;
}

// exhaustive maximum clique for n <= ~24, independent of the solver
inline std::size_t brute_force_omega(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
    std::size_t size = std::popcount(mask);
    if (size <= best) continue;
    bool clique = true;
    for (std::size_t i = 0; i < n && clique; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = i + 1; j < n; ++j)
        if ((mask >> j & 1) && !g.has_edge(Point(i), Point(j))) {
          clique = false;
          break;
        }
    }
    if (clique) best = size;
  }
  return best;
}

// exhaustive chromatic number for n <= ~12
inline std::size_t brute_force_chi(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> colour(n, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t v) -> bool {
      if (v == n) return true;
      for (std::size_t c = 1; c <= k; ++c) {
        bool ok = true;
        for (Point u = 0; u < v; ++u)
          if (g.has_edge(u, Point(v)) && colour[u] == c) ok = false;
        if (ok) {
          colour[v] = c;
          if (rec(v + 1)) return true;
          colour[v] = 0;
        }
      }
      return false;
    };
    if (rec(0)) return k;
  }
  return n;
}

}  // namespace testutil
