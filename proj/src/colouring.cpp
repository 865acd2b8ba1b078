#include "synckit/colouring.hpp"

#include <algorithm>
#include <sstream>

#include "synckit/verify.hpp"

namespace synckit {

namespace {

// Exact k-colourability of a weighted graph by DSATUR backtracking. Each
// vertex carries a weight (1 for plain graphs, orbit size for quotients);
// max_class_weight, when non-zero, caps the weight of a colour class.
class ColourSearch {
public:
  ColourSearch(const Graph& g, std::size_t k,
               const std::vector<std::size_t>& weight,
               std::size_t max_class_weight, std::uint64_t budget)
      : g_(g),
        n_(g.order()),
        k_(k),
        weight_(weight),
        cap_(max_class_weight),
        budget_(budget) {
    colour_.assign(n_, 0);
    // adj_count_[v][c]: neighbours of v coloured c; saturation_[v]: number
    // of distinct colours among neighbours
    adj_count_.assign(n_, std::vector<std::uint32_t>(k_ + 1, 0));
    saturation_.assign(n_, 0);
    class_weight_.assign(k_ + 1, 0);
    degree_.resize(n_);
    for (Point v = 0; v < n_; ++v) degree_[v] = g_.degree(v);
  }

  std::optional<std::vector<std::vector<Point>>> run() {
    if (n_ == 0) return std::vector<std::vector<Point>>{};
    if (k_ == 0) return std::nullopt;
    // seed: a greedy clique gets pairwise distinct colours
    std::vector<Point> seed = greedy_clique();
    if (seed.size() > k_) return std::nullopt;
    for (Point v : seed) {
      ++used_;
      if (!try_assign(v, used_)) return std::nullopt;
    }
    coloured_ = seed.size();
    if (!search()) return std::nullopt;
    std::vector<std::vector<Point>> classes(used_);
    for (Point v = 0; v < n_; ++v) classes[colour_[v] - 1].push_back(v);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
  }

private:
  std::vector<Point> greedy_clique() {
    std::vector<Point> clique;
    Bitset cand(n_);
    cand.set_all();
    while (cand.any()) {
      Point best = 0;
      std::size_t best_deg = 0;
      bool have = false;
      cand.for_each([&](std::size_t v) {
        std::size_t d = g_.row(v).count_and(cand);
        if (!have || d > best_deg) {
          have = true;
          best = Point(v);
          best_deg = d;
        }
      });
      clique.push_back(best);
      cand &= g_.row(best);
    }
    return clique;
  }

  bool try_assign(Point v, std::size_t c) {
    if (cap_ && class_weight_[c] + weight_[v] > cap_) return false;
    colour_[v] = c;
    class_weight_[c] += weight_[v];
    g_.row(v).for_each([&](std::size_t u) {
      if (adj_count_[u][c]++ == 0) ++saturation_[u];
    });
    return true;
  }

  void unassign(Point v, std::size_t c) {
    colour_[v] = 0;
    class_weight_[c] -= weight_[v];
    g_.row(v).for_each([&](std::size_t u) {
      if (--adj_count_[u][c] == 0) --saturation_[u];
    });
  }

  bool search() {
    if (coloured_ == n_) return true;
    if (++nodes_ > budget_)
      throw ResourceError("colouring node budget exceeded");
    // DSATUR: most saturated uncoloured vertex; ties by degree then index
    Point pick = 0;
    std::size_t best_sat = 0, best_deg = 0;
    bool have = false;
    for (Point v = 0; v < n_; ++v) {
      if (colour_[v]) continue;
      std::size_t sat = saturation_[v];
      if (!have || sat > best_sat ||
          (sat == best_sat && degree_[v] > best_deg)) {
        have = true;
        pick = v;
        best_sat = sat;
        best_deg = degree_[v];
      }
    }
    // canonical class order: a fresh class only as colour used_+1
    std::size_t limit = std::min(used_ + 1, k_);
    for (std::size_t c = 1; c <= limit; ++c) {
      if (adj_count_[pick][c] > 0) continue;
      std::size_t prev_used = used_;
      used_ = std::max(used_, c);
      if (try_assign(pick, c)) {
        ++coloured_;
        if (search()) return true;
        --coloured_;
        unassign(pick, c);
      }
      used_ = prev_used;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_, k_;
  std::vector<std::size_t> weight_;
  std::size_t cap_;
  std::uint64_t budget_, nodes_ = 0;
  std::vector<std::size_t> colour_;
  std::vector<std::vector<std::uint32_t>> adj_count_;
  std::vector<std::size_t> saturation_;
  std::vector<std::size_t> class_weight_;
  std::vector<std::size_t> degree_;
  std::size_t used_ = 0, coloured_ = 0;
};

}  // namespace

std::optional<Colouring> chromatic_le(const Graph& g, std::size_t k,
                                      const ColouringOptions& opts) {
  if (g.order() == 0) return Colouring{};
  if (k == 0) return std::nullopt;
  ColourSearch search(g, k, std::vector<std::size_t>(g.order(), 1),
                      opts.max_class_size, opts.node_budget);
  auto classes = search.run();
  if (!classes) return std::nullopt;
  Colouring col{std::move(*classes)};
  if (!check::proper_colouring(g, col.classes))
    throw Error("internal: colouring failed verification");
  return col;
}

std::optional<Colouring> classwise_invariant_colouring(
    const Graph& g, const std::vector<Perm>& k_gens, std::size_t k,
    const ColouringOptions& opts) {
  for (const Perm& p : k_gens)
    if (!is_invariant_under(g, p))
      throw PreconditionError("K is not a group of automorphisms");
  auto orbits = point_orbits(k_gens, g.order());
  // every class is a union of orbits, so every orbit must be a coclique
  for (const auto& orb : orbits)
    if (!check::coclique(g, orb)) return std::nullopt;
  Graph q(orbits.size());
  std::vector<std::size_t> weight(orbits.size());
  std::vector<std::size_t> orbit_of(g.order());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    weight[i] = orbits[i].size();
    for (Point v : orbits[i]) orbit_of[v] = i;
  }
  for (Point v = 0; v < g.order(); ++v)
    g.row(v).for_each([&](std::size_t u) {
      if (orbit_of[v] != orbit_of[u])
        q.add_edge(Point(orbit_of[v]), Point(orbit_of[u]));
    });
  ColourSearch search(q, k, weight, opts.max_class_size, opts.node_budget);
  auto qclasses = search.run();
  if (!qclasses) return std::nullopt;
  Colouring col;
  for (const auto& qc : *qclasses) {
    std::vector<Point> cl;
    for (Point oi : qc)
      cl.insert(cl.end(), orbits[oi].begin(), orbits[oi].end());
    std::sort(cl.begin(), cl.end());
    col.classes.push_back(std::move(cl));
  }
  std::sort(col.classes.begin(), col.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (!check::proper_colouring(g, col.classes))
    throw Error("internal: classwise colouring failed verification");
  return col;
}

NonSyncCertificate is_non_synchronizing_graph(const Graph& g,
                                              const SearchLimits& clique_lim,
                                              const ColouringOptions& col_opts) {
  NonSyncCertificate cert;
  if (g.order() == 0 || g.is_null()) {
    cert.reason = "null graph";
    return cert;
  }
  if (g.is_complete()) {
    cert.reason = "complete graph";
    return cert;
  }
  auto mc = max_clique(g, nullptr, clique_lim);
  cert.omega = mc.omega;
  cert.clique = mc.witness;
  auto col = chromatic_le(g, mc.omega, col_opts);
  if (!col) {
    cert.reason = "chromatic number exceeds clique number";
    return cert;
  }
  cert.non_synchronizing = true;
  cert.colouring = std::move(*col);
  return cert;
}

std::string colouring_to_text(const Colouring& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    out << "class " << i + 1 << ":";
    for (Point v : c.classes[i]) out << " " << v + 1;
    out << "\n";
  }
  return out.str();
}

}  // namespace synckit
