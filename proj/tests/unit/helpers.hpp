#pragma once

#include <initializer_list>
#include <map>
#include <vector>

#include "synckit/group.hpp"
#include "synckit/perm.hpp"

namespace testutil {

using synckit::GroupSpec;
using synckit::Perm;
using synckit::Point;

// Builds a permutation of degree n from disjoint cycles given in 1-based
// points, e.g. cyc(5, {{1,2,3}}) is (1 2 3) on 5 points.
inline Perm cyc(std::size_t n,
                std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = Point(i);
  for (const auto& c : cycles) {
    std::vector<Point> pts(c);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Point from = pts[i] - 1;
      Point to = pts[(i + 1) % pts.size()] - 1;
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

inline GroupSpec make_group(std::size_t n, std::vector<Perm> gens,
                            std::string name = "") {
  GroupSpec G;
  G.degree = n;
  G.generators = std::move(gens);
  G.name = std::move(name);
  return G;
}

inline GroupSpec symmetric_group(std::size_t n) {
  std::vector<Perm> gens;
  gens.push_back(cyc(n, {{1, 2}}));
  std::vector<Point> big;
  for (Point i = 1; i <= n; ++i) big.push_back(i);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = Point((i + 1) % n);
  gens.push_back(Perm(std::move(img)));
  return make_group(n, std::move(gens), "Sym(" + std::to_string(n) + ")");
}

inline GroupSpec cyclic_group(std::size_t n) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = Point((i + 1) % n);
  return make_group(n, {Perm(std::move(img))},
                    "C" + std::to_string(n));
}

// Induced action of G on the 2-subsets of its domain, pairs ordered
// lexicographically. Degree n*(n-1)/2.
inline GroupSpec action_on_pairs(const GroupSpec& G) {
  const std::size_t n = G.degree;
  const std::size_t N = n * (n - 1) / 2;
  GroupSpec A;
  A.degree = N;
  for (const Perm& g : G.generators) {
    std::vector<Point> img(N);
    for (Point a = 0; a < n; ++a)
      for (Point b = a + 1; b < n; ++b) {
        Point x = g[a], y = g[b];
        if (x > y) std::swap(x, y);
        img[synckit::pair_index(n, a, b)] =
            Point(synckit::pair_index(n, x, y));
      }
    A.generators.push_back(Perm(std::move(img)));
  }
  A.name = G.name + " on pairs";
  return A;
}

// Brute-force group order by BFS closure over composition; for small groups.
inline std::size_t brute_force_order(const GroupSpec& G, std::size_t cap = 2000000) {
  std::map<std::vector<Point>, bool> seen;
  std::vector<Perm> queue{Perm::identity(G.degree)};
  seen[queue[0].images()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Perm& g : G.generators) {
      Perm h = queue[i] * g;
      if (seen.emplace(h.images(), true).second) {
        queue.push_back(h);
        if (queue.size() > cap) throw std::runtime_error("closure too large");
      }
    }
  }
  return queue.size();
}

}  // namespace testutil
