#include "synckit/clique.hpp"

#include <algorithm>
#include <numeric>

#include "synckit/parallel.hpp"
#include "synckit/stabchain.hpp"
#include "synckit/wclique.hpp"

namespace synckit {

namespace {

enum class Mode { Max, Exists, Enumerate };

struct Task {
  std::vector<Point> clique;  // positions
  Bitset cand;
};

struct TaskOutcome {
  std::size_t best = 0;
  std::vector<Point> witness;  // positions
  bool found = false;
  std::vector<std::vector<Point>> all;
  std::uint64_t nodes = 0;
};

struct LevelScratch {
  std::vector<Bitset> classes;
  std::vector<std::pair<Point, int>> order;  // (position, colour), colour asc
  Bitset reduced;
  std::vector<bool> skipped;
  std::vector<Point> orbit_rep;
};

// union-find orbit representatives under <gens>, in position space
void orbit_partition(const std::vector<Perm>& gens,
                     const std::vector<Point>& orig_of,
                     const std::vector<Point>& pos_of,
                     std::vector<Point>& rep) {
  const std::size_t n = orig_of.size();
  rep.resize(n);
  std::iota(rep.begin(), rep.end(), 0);
  auto find = [&](Point x) {
    while (rep[x] != x) {
      rep[x] = rep[rep[x]];
      x = rep[x];
    }
    return x;
  };
  for (const Perm& g : gens)
    for (Point u = 0; u < n; ++u) {
      Point a = find(u);
      Point b = find(pos_of[g[orig_of[u]]]);
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
  for (Point u = 0; u < n; ++u) rep[u] = find(u);
}

class CliqueSearch {
public:
  CliqueSearch(const Graph& g, const GroupSpec* sym, Mode mode, std::size_t k,
               const SearchLimits& lim, std::size_t max_count = SIZE_MAX)
      : n_(g.order()),
        mode_(mode),
        k_(k),
        max_count_(max_count),
        lim_(lim),
        sym_(sym) {
    std::vector<Point> verts(n_);
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(), [&](Point a, Point b) {
      return g.degree(a) > g.degree(b);
    });
    orig_of_ = verts;
    pos_of_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) pos_of_[orig_of_[p]] = Point(p);
    adj_.assign(n_, Bitset(n_));
    for (Point u = 0; u < n_; ++u)
      g.row(u).for_each(
          [&](std::size_t v) { adj_[pos_of_[u]].set(pos_of_[v]); });
    split_depth_ = lim.split_depth >= 0 ? std::size_t(lim.split_depth)
                                        : (n_ >= 50 ? 1 : 0);
  }

  std::vector<TaskOutcome> run() {
    std::vector<Task> tasks;
    Bitset all(n_);
    all.set_all();
    std::vector<Point> empty;
    collect_tasks(empty, all,
                  sym_ ? std::optional<std::vector<Perm>>(sym_->generators)
                       : std::nullopt,
                  0, tasks);
    TaskControl control;
    TaskControl* ctrl = mode_ == Mode::Exists ? &control : nullptr;
    return run_indexed<TaskOutcome>(
        tasks.size(), lim_.workers,
        [&](std::size_t i) { return solve_task(tasks[i], i, ctrl); }, ctrl);
  }

  std::vector<Point> to_original(const std::vector<Point>& positions) const {
    std::vector<Point> v;
    v.reserve(positions.size());
    for (Point p : positions) v.push_back(orig_of_[p]);
    std::sort(v.begin(), v.end());
    return v;
  }

private:
  bool sym_active(std::size_t clique_size) const {
    return sym_ && clique_size < std::size_t(lim_.sym_depth);
  }

  std::vector<Perm> stabilizer_of(const std::vector<Perm>& gens,
                                  Point pos) const {
    if (gens.empty()) return {};
    StabChain chain(n_, gens, {orig_of_[pos]});
    return chain.stabilizer_generators(1);
  }

  // greedy colouring of the candidate set; order holds (vertex, colour)
  // sorted by colour ascending, ties by position
  void colour_sort(const Bitset& cand, LevelScratch& s) {
    s.order.clear();
    std::size_t used = 0;
    cand.for_each([&](std::size_t v) {
      std::size_t c = 0;
      for (; c < used; ++c)
        if (!s.classes[c].intersects(adj_[v])) break;
      if (c == used) {
        if (s.classes.size() == used)
          s.classes.emplace_back(n_);
        else
          s.classes[used].clear();
        ++used;
      }
      s.classes[c].set(v);
      s.order.emplace_back(Point(v), int(c) + 1);
    });
    for (std::size_t c = 0; c < used; ++c) s.classes[c].clear();
    std::stable_sort(
        s.order.begin(), s.order.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
  }

  void collect_tasks(std::vector<Point>& clique, const Bitset& cand,
                     std::optional<std::vector<Perm>> stab, std::size_t depth,
                     std::vector<Task>& out) {
    if (mode_ != Mode::Max && clique.size() == k_) {
      out.push_back(Task{clique, Bitset(n_)});
      return;
    }
    if (depth == split_depth_ || cand.none()) {
      out.push_back(Task{clique, cand});
      return;
    }
    LevelScratch s;
    colour_sort(cand, s);
    bool use_sym = stab && !stab->empty() && sym_active(clique.size());
    if (use_sym) {
      orbit_partition(*stab, orig_of_, pos_of_, s.orbit_rep);
      s.skipped.assign(n_, false);
    }
    Bitset remaining = cand;
    std::size_t prune = mode_ == Mode::Max ? 1 : k_;
    for (std::size_t i = s.order.size(); i-- > 0;) {
      auto [v, col] = s.order[i];
      if (clique.size() + std::size_t(col) < prune) break;
      if (!remaining.test(v)) continue;
      if (use_sym && s.skipped[s.orbit_rep[v]]) continue;
      clique.push_back(v);
      std::optional<std::vector<Perm>> sub;
      if (use_sym && sym_active(clique.size())) {
        sub = stabilizer_of(*stab, v);
      }
      Bitset reduced = remaining & adj_[v];
      collect_tasks(clique, reduced, sub, depth + 1, out);
      clique.pop_back();
      remaining.reset(v);
      if (use_sym) s.skipped[s.orbit_rep[v]] = true;
    }
  }

  TaskOutcome solve_task(const Task& t, std::size_t idx, TaskControl* ctrl) {
    TaskOutcome out;
    if (mode_ == Mode::Max) {
      out.best = t.clique.size();
      out.witness = t.clique;
    } else if (t.clique.size() == k_) {
      out.found = true;
      out.witness = t.clique;
      if (mode_ == Mode::Enumerate) out.all.push_back(t.clique);
      if (ctrl) ctrl->record_success(idx);
      return out;
    }
    if (ctrl && ctrl->obsolete(idx)) return out;
    std::vector<Point> clique = t.clique;
    // recover the pointwise stabilizer of the chosen prefix
    std::optional<std::vector<Perm>> stab;
    if (sym_ && sym_active(clique.size())) {
      std::vector<Perm> gens = sym_->generators;
      for (Point v : clique) {
        gens = stabilizer_of(gens, v);
        if (gens.empty()) break;
      }
      if (!gens.empty()) stab = std::move(gens);
    }
    std::vector<LevelScratch> scratch(n_ + 1);
    expand(clique, t.cand, stab, 0, scratch, out, idx, ctrl);
    return out;
  }

  // returns false when the task should unwind (witness found / cancelled)
  bool expand(std::vector<Point>& clique, const Bitset& cand,
              const std::optional<std::vector<Perm>>& stab, std::size_t depth,
              std::vector<LevelScratch>& scratch, TaskOutcome& out,
              std::size_t idx, TaskControl* ctrl) {
    if (++out.nodes > lim_.node_budget)
      throw ResourceError("clique search node budget exceeded",
                          std::int64_t(out.best));
    if (ctrl && (out.nodes & 1023) == 0 && ctrl->obsolete(idx)) return false;

    LevelScratch& s = scratch[depth];
    colour_sort(cand, s);
    bool use_sym = stab && !stab->empty() && sym_active(clique.size());
    if (use_sym) {
      orbit_partition(*stab, orig_of_, pos_of_, s.orbit_rep);
      s.skipped.assign(n_, false);
    }
    Bitset remaining = cand;
    for (std::size_t i = s.order.size(); i-- > 0;) {
      auto [v, col] = s.order[i];
      std::size_t prune = mode_ == Mode::Max ? out.best + 1 : k_;
      if (clique.size() + std::size_t(col) < prune) break;
      if (!remaining.test(v)) continue;
      if (use_sym && s.skipped[s.orbit_rep[v]]) continue;

      clique.push_back(v);
      s.reduced = remaining;
      s.reduced &= adj_[v];
      bool keep_going = true;
      if (mode_ == Mode::Max) {
        if (clique.size() > out.best) {
          out.best = clique.size();
          out.witness = clique;
        }
        if (s.reduced.any()) {
          std::optional<std::vector<Perm>> sub;
          if (use_sym && sym_active(clique.size()))
            sub = stabilizer_of(*stab, v);
          keep_going =
              expand(clique, s.reduced, sub, depth + 1, scratch, out, idx, ctrl);
        }
      } else if (clique.size() == k_) {
        if (mode_ == Mode::Exists) {
          out.found = true;
          out.witness = clique;
          if (ctrl) ctrl->record_success(idx);
          keep_going = false;
        } else {
          out.all.push_back(clique);
          if (out.all.size() > max_count_)
            throw ResourceError("clique enumeration cap exceeded",
                                std::int64_t(out.all.size()));
        }
      } else if (s.reduced.any()) {
        std::optional<std::vector<Perm>> sub;
        if (use_sym && sym_active(clique.size()))
          sub = stabilizer_of(*stab, v);
        keep_going =
            expand(clique, s.reduced, sub, depth + 1, scratch, out, idx, ctrl);
      }
      clique.pop_back();
      if (!keep_going) return false;
      remaining.reset(v);
      if (use_sym) s.skipped[s.orbit_rep[v]] = true;
    }
    return true;
  }

  std::size_t n_;
  Mode mode_;
  std::size_t k_;
  std::size_t max_count_;
  SearchLimits lim_;
  const GroupSpec* sym_;
  std::vector<Point> orig_of_, pos_of_;
  std::vector<Bitset> adj_;
  std::size_t split_depth_ = 0;
};

// restrict to cliques that are unions of <fix>-orbits via a scalar
// weighted-clique instance on the orbit quotient
std::optional<std::vector<Point>> fix_restricted_clique(
    const Graph& g, std::size_t k, const std::vector<Perm>& fix,
    const SearchLimits& lim) {
  auto orbits = point_orbits(fix, g.order());
  std::vector<std::vector<Point>> usable;
  for (auto& orb : orbits) {
    std::sort(orb.begin(), orb.end());
    bool clique = true;
    for (std::size_t i = 0; i < orb.size() && clique; ++i)
      for (std::size_t j = i + 1; j < orb.size(); ++j)
        if (!g.has_edge(orb[i], orb[j])) {
          clique = false;
          break;
        }
    if (clique && orb.size() <= k) usable.push_back(orb);
  }
  WeightedGraph q;
  q.graph = Graph(usable.size());
  q.dim = 1;
  for (const auto& orb : usable)
    q.weights.push_back({std::uint32_t(orb.size())});
  for (std::size_t i = 0; i < usable.size(); ++i)
    for (std::size_t j = i + 1; j < usable.size(); ++j) {
      bool complete = true;
      for (Point a : usable[i]) {
        for (Point b : usable[j])
          if (!g.has_edge(a, b)) {
            complete = false;
            break;
          }
        if (!complete) break;
      }
      if (complete) q.graph.add_edge(Point(i), Point(j));
    }
  if (usable.empty()) return std::nullopt;
  auto sol = vector_weighted_clique(q, {std::uint32_t(k)}, lim);
  if (!sol) return std::nullopt;
  std::vector<Point> verts;
  for (Point oi : *sol)
    for (Point v : usable[oi]) verts.push_back(v);
  std::sort(verts.begin(), verts.end());
  return verts;
}

}  // namespace

CliqueResult max_clique(const Graph& g, const GroupSpec* sym,
                        const SearchLimits& lim) {
  if (g.order() == 0) throw PreconditionError("empty graph");
  CliqueSearch search(g, sym, Mode::Max, 0, lim);
  auto outcomes = search.run();
  CliqueResult res;
  for (const auto& o : outcomes) {
    res.nodes += o.nodes;
    if (o.best > res.omega) {
      res.omega = o.best;
      res.witness = o.witness;
    }
  }
  res.witness = search.to_original(res.witness);
  return res;
}

std::optional<std::vector<Point>> find_clique_of_size(
    const Graph& g, std::size_t k, const GroupSpec* sym,
    const std::vector<Perm>* fix, const SearchLimits& lim) {
  if (k < 1 || k > g.order())
    throw PreconditionError("clique size out of range");
  if (fix && !fix->empty()) {
    bool nontrivial = false;
    for (const Perm& p : *fix) nontrivial |= !p.is_identity();
    if (nontrivial) return fix_restricted_clique(g, k, *fix, lim);
  }
  CliqueSearch search(g, sym, Mode::Exists, k, lim);
  auto outcomes = search.run();
  for (const auto& o : outcomes)
    if (o.found) return search.to_original(o.witness);
  return std::nullopt;
}

std::vector<std::vector<Point>> enumerate_cliques_of_size(
    const Graph& g, std::size_t k, std::size_t max_count,
    const SearchLimits& lim) {
  if (k < 1 || k > g.order())
    throw PreconditionError("clique size out of range");
  CliqueSearch search(g, nullptr, Mode::Enumerate, k, lim, max_count);
  auto outcomes = search.run();
  std::vector<std::vector<Point>> all;
  for (const auto& o : outcomes)
    for (const auto& c : o.all) all.push_back(search.to_original(c));
  if (all.size() > max_count)
    throw ResourceError("clique enumeration cap exceeded",
                        std::int64_t(all.size()));
  return all;
}

}  // namespace synckit
