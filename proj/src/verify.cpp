#include "synckit/verify.hpp"

#include <algorithm>

namespace synckit::check {

bool clique(const Graph& g, const std::vector<Point>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  }
  return true;
}

bool coclique(const Graph& g, const std::vector<Point>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i] >= g.order()) return false;
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) return false;
  }
  return true;
}

bool partition(std::size_t n, const std::vector<std::vector<Point>>& classes) {
  std::vector<bool> seen(n, false);
  std::size_t total = 0;
  for (const auto& cl : classes)
    for (Point v : cl) {
      if (v >= n || seen[v]) return false;
      seen[v] = true;
      ++total;
    }
  return total == n;
}

bool proper_colouring(const Graph& g,
                      const std::vector<std::vector<Point>>& classes,
                      bool require_partition) {
  if (require_partition && !partition(g.order(), classes)) return false;
  for (const auto& cl : classes)
    if (!coclique(g, cl)) return false;
  return true;
}

bool invariant(const Graph& g, const std::vector<Perm>& gens) {
  for (const Perm& p : gens)
    if (!is_invariant_under(g, p)) return false;
  return true;
}

bool exact_cover_of(std::size_t ground,
                    const std::vector<std::vector<Point>>& parts) {
  return partition(ground, parts);
}

}  // namespace synckit::check
