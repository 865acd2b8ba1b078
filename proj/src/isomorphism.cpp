#include "synckit/isomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "synckit/spectral.hpp"

namespace synckit {

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Point v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<std::size_t> triangle_counts(const Graph& g) {
  std::vector<std::size_t> t(g.order(), 0);
  for (Point v = 0; v < g.order(); ++v)
    g.row(v).for_each([&](std::size_t u) {
      t[v] += g.row(v).count_and(g.row(Point(u)));
    });
  std::sort(t.begin(), t.end());
  return t;
}

bool spectra_match(const Graph& a, const Graph& b) {
  auto ea = adjacency_eigenvalues(a);
  auto eb = adjacency_eigenvalues(b);
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (std::fabs(ea[i] - eb[i]) > 1e-5) return false;
  return true;
}

// Joint colour refinement; colours are comparable across the two graphs.
// Returns false when the colour multisets diverge.
struct Refiner {
  const Graph &a, &b;
  std::vector<std::uint32_t> ca, cb;

  bool refine() {
    while (true) {
      std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
               std::uint32_t>
          sig_map;
      auto signature = [&](const Graph& g, const std::vector<std::uint32_t>& c,
                           Point v) {
        std::vector<std::uint32_t> neigh;
        g.row(v).for_each([&](std::size_t u) { neigh.push_back(c[u]); });
        std::sort(neigh.begin(), neigh.end());
        return std::make_pair(c[v], std::move(neigh));
      };
      std::vector<std::uint32_t> na(a.order()), nb(b.order());
      // collect signatures from both graphs into one numbering
      std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> sa, sb;
      sa.reserve(a.order());
      sb.reserve(b.order());
      for (Point v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
      for (Point v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
      for (const auto& s : sa) sig_map.emplace(s, 0);
      for (const auto& s : sb) sig_map.emplace(s, 0);
      std::uint32_t next = 0;
      for (auto& [k, v] : sig_map) v = next++;
      for (Point v = 0; v < a.order(); ++v) na[v] = sig_map[sa[v]];
      for (Point v = 0; v < b.order(); ++v) nb[v] = sig_map[sb[v]];
      // compare colour multisets
      std::vector<std::uint32_t> ma(na), mb(nb);
      std::sort(ma.begin(), ma.end());
      std::sort(mb.begin(), mb.end());
      if (ma != mb) return false;
      bool changed = na != ca || nb != cb;
      ca = std::move(na);
      cb = std::move(nb);
      if (!changed) return true;
    }
  }
};

class IsoSearch {
public:
  IsoSearch(const Graph& a, const Graph& b, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget) {}

  std::optional<std::vector<Point>> run() {
    Refiner r{a_, b_, std::vector<std::uint32_t>(a_.order(), 0),
              std::vector<std::uint32_t>(b_.order(), 0)};
    if (!r.refine()) return std::nullopt;
    std::vector<Point> mapping;
    if (search(r)) {
      return mapping_;
    }
    return std::nullopt;
  }

private:
  bool search(Refiner& r) {
    if (++nodes_ > budget_)
      throw ResourceError("isomorphism node budget exceeded");
    // smallest non-singleton colour class in a (by colour id)
    std::map<std::uint32_t, std::vector<Point>> cells_a, cells_b;
    for (Point v = 0; v < a_.order(); ++v) cells_a[r.ca[v]].push_back(v);
    for (Point v = 0; v < b_.order(); ++v) cells_b[r.cb[v]].push_back(v);
    std::uint32_t target = UINT32_MAX;
    for (const auto& [c, verts] : cells_a)
      if (verts.size() > 1) {
        target = c;
        break;
      }
    if (target == UINT32_MAX) {
      // discrete partition: read off the bijection and verify
      std::vector<Point> map(a_.order());
      for (const auto& [c, verts] : cells_a) {
        auto it = cells_b.find(c);
        if (it == cells_b.end() || it->second.size() != 1) return false;
        map[verts[0]] = it->second[0];
      }
      for (Point u = 0; u < a_.order(); ++u) {
        bool ok = true;
        if (a_.degree(u) != b_.degree(map[u])) return false;
        a_.row(u).for_each([&](std::size_t v) {
          if (!b_.has_edge(map[u], map[Point(v)])) ok = false;
        });
        if (!ok) return false;
      }
      mapping_ = map;
      return true;
    }
    Point u = cells_a[target][0];
    std::uint32_t fresh =
        std::max(*std::max_element(r.ca.begin(), r.ca.end()),
                 *std::max_element(r.cb.begin(), r.cb.end())) +
        1;
    for (Point v : cells_b[target]) {
      Refiner sub = r;
      sub.ca[u] = fresh;
      sub.cb[v] = fresh;
      if (!sub.refine()) continue;
      if (search(sub)) return true;
    }
    return false;
  }

  const Graph &a_, &b_;
  std::uint64_t budget_, nodes_ = 0;
  std::vector<Point> mapping_;
};

}  // namespace

std::optional<std::vector<Point>> find_isomorphism(const Graph& a,
                                                   const Graph& b,
                                                   const IsoOptions& opts) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.edge_count() != b.edge_count()) return std::nullopt;
  if (a.order() == 0) return std::vector<Point>{};
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
  if (triangle_counts(a) != triangle_counts(b)) return std::nullopt;
  if (opts.use_spectrum && a.order() <= 300 && !spectra_match(a, b))
    return std::nullopt;
  IsoSearch search(a, b, opts.node_budget);
  return search.run();
}

bool is_isomorphic(const Graph& a, const Graph& b, const IsoOptions& opts) {
  return find_isomorphism(a, b, opts).has_value();
}

}  // namespace synckit
