#include "synckit/cover.hpp"

#include <algorithm>
#include <map>

#include "synckit/stabchain.hpp"

namespace synckit {

namespace {

// classic dancing-links matrix
class Dlx {
public:
  Dlx(std::size_t columns, const std::vector<std::vector<Point>>& rows)
      : ncols_(columns) {
    // node 0..ncols-1 are column headers; root is node ncols
    std::size_t total = ncols_ + 1;
    for (const auto& r : rows) total += r.size();
    left_.resize(total);
    right_.resize(total);
    up_.resize(total);
    down_.resize(total);
    col_.resize(total);
    row_id_.resize(total, SIZE_MAX);
    count_.assign(ncols_, 0);

    const std::size_t root = ncols_;
    for (std::size_t c = 0; c <= ncols_; ++c) {
      left_[c] = c == 0 ? root : c - 1;
      right_[c] = c == ncols_ ? 0 : c + 1;
      up_[c] = c;
      down_[c] = c;
      col_[c] = c;
    }
    std::size_t node = ncols_ + 1;
    for (std::size_t ri = 0; ri < rows.size(); ++ri) {
      std::size_t first = node;
      for (Point c : rows[ri]) {
        col_[node] = c;
        row_id_[node] = ri;
        // vertical insertion at the bottom of column c
        up_[node] = up_[c];
        down_[node] = c;
        down_[up_[c]] = node;
        up_[c] = node;
        ++count_[c];
        // horizontal circular list within the row
        if (node == first) {
          left_[node] = node;
          right_[node] = node;
        } else {
          left_[node] = node - 1;
          right_[node] = first;
          right_[node - 1] = node;
          left_[first] = node;
        }
        ++node;
      }
    }
  }

  std::optional<std::vector<std::size_t>> solve(std::uint64_t budget) {
    budget_ = budget;
    nodes_ = 0;
    solution_.clear();
    if (search()) {
      std::vector<std::size_t> rows(solution_);
      std::sort(rows.begin(), rows.end());
      return rows;
    }
    return std::nullopt;
  }

private:
  void cover(std::size_t c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (std::size_t i = down_[c]; i != c; i = down_[i])
      for (std::size_t j = right_[i]; j != i; j = right_[j]) {
        down_[up_[j]] = down_[j];
        up_[down_[j]] = up_[j];
        --count_[col_[j]];
      }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = up_[c]; i != c; i = up_[i])
      for (std::size_t j = left_[i]; j != i; j = left_[j]) {
        ++count_[col_[j]];
        down_[up_[j]] = j;
        up_[down_[j]] = j;
      }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  bool search() {
    if (++nodes_ > budget_)
      throw ResourceError("exact cover node budget exceeded");
    const std::size_t root = ncols_;
    if (right_[root] == root) return true;
    // fewest-candidates column, ties by index
    std::size_t best = right_[root];
    for (std::size_t c = right_[root]; c != root; c = right_[c])
      if (count_[c] < count_[best]) best = c;
    if (count_[best] == 0) return false;
    cover(best);
    for (std::size_t r = down_[best]; r != best; r = down_[r]) {
      solution_.push_back(row_id_[r]);
      for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
      if (search()) return true;
      for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
      solution_.pop_back();
    }
    uncover(best);
    return false;
  }

  std::size_t ncols_;
  std::vector<std::size_t> left_, right_, up_, down_, col_, row_id_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> solution_;
  std::uint64_t nodes_ = 0, budget_ = 0;
};

void validate_subset(std::size_t ground, const std::vector<Point>& s) {
  if (s.empty()) throw PreconditionError("empty candidate subset");
  for (Point x : s)
    if (x >= ground) throw PreconditionError("subset element out of range");
}

}  // namespace

std::optional<std::vector<std::size_t>> exact_cover(
    std::size_t ground, const std::vector<std::vector<Point>>& sets,
    std::uint64_t node_budget) {
  for (const auto& s : sets) validate_subset(ground, s);
  Dlx dlx(ground, sets);
  return dlx.solve(node_budget);
}

std::vector<std::vector<Point>> expand_seed_orbits(const CoverInstance& inst,
                                                   std::size_t max_candidates) {
  std::map<std::vector<Point>, std::size_t> index;
  std::vector<std::vector<Point>> candidates;
  for (const auto& seed : inst.seeds) {
    std::vector<Point> s(seed);
    std::sort(s.begin(), s.end());
    validate_subset(inst.ground, s);
    std::vector<std::size_t> queue;
    auto [it, fresh] = index.emplace(s, candidates.size());
    if (fresh) {
      candidates.push_back(s);
      queue.push_back(it->second);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::vector<Point> cur = candidates[queue[qi]];
      for (const Perm& g : inst.group.generators) {
        std::vector<Point> img;
        img.reserve(cur.size());
        for (Point x : cur) img.push_back(g[x]);
        std::sort(img.begin(), img.end());
        auto [jt, added] = index.emplace(img, candidates.size());
        if (added) {
          candidates.push_back(img);
          queue.push_back(jt->second);
          if (candidates.size() > max_candidates)
            throw ResourceError("cover candidate expansion exceeded bound");
        }
      }
    }
  }
  return candidates;
}

std::optional<std::vector<std::vector<Point>>> exact_cover_invariant(
    const CoverInstance& inst, const CoverOptions& opts) {
  if (inst.group.degree != inst.ground)
    throw PreconditionError("group degree does not match ground set");
  if (!inst.h_gens.empty()) {
    StabChain g_chain(inst.group.degree, inst.group.generators);
    for (const Perm& h : inst.h_gens)
      if (!g_chain.contains(h))
        throw PreconditionError("H is not a subgroup of G");
  }

  auto candidates = expand_seed_orbits(inst, opts.max_candidates);

  // bundle candidates into <H>-orbits; a bundle whose members overlap can
  // never be chosen and is dropped
  std::map<std::vector<Point>, std::size_t> index;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    index.emplace(candidates[i], i);
  std::vector<bool> assigned(candidates.size(), false);
  std::vector<std::vector<std::size_t>> bundles;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> bundle{i};
    assigned[i] = true;
    for (std::size_t qi = 0; qi < bundle.size(); ++qi) {
      for (const Perm& h : inst.h_gens) {
        std::vector<Point> img;
        img.reserve(candidates[bundle[qi]].size());
        for (Point x : candidates[bundle[qi]]) img.push_back(h[x]);
        std::sort(img.begin(), img.end());
        auto it = index.find(img);
        if (it == index.end())
          throw PreconditionError(
              "H does not preserve the candidate family");
        if (!assigned[it->second]) {
          assigned[it->second] = true;
          bundle.push_back(it->second);
        }
      }
    }
    std::sort(bundle.begin(), bundle.end());
    bundles.push_back(std::move(bundle));
  }

  std::vector<std::vector<Point>> bundle_union;
  std::vector<std::size_t> bundle_ok;
  for (std::size_t b = 0; b < bundles.size(); ++b) {
    std::size_t total = 0;
    std::vector<Point> u;
    for (std::size_t ci : bundles[b]) {
      total += candidates[ci].size();
      u.insert(u.end(), candidates[ci].begin(), candidates[ci].end());
    }
    std::sort(u.begin(), u.end());
    if (std::adjacent_find(u.begin(), u.end()) != u.end()) continue;  // overlap
    (void)total;
    bundle_union.push_back(std::move(u));
    bundle_ok.push_back(b);
  }

  auto chosen = exact_cover(inst.ground, bundle_union, opts.node_budget);
  if (!chosen) return std::nullopt;

  std::vector<std::vector<Point>> parts;
  for (std::size_t bi : *chosen)
    for (std::size_t ci : bundles[bundle_ok[bi]]) parts.push_back(candidates[ci]);
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return parts;
}

WcliqueInstance cover_as_wclique(std::size_t ground,
                                 const std::vector<std::vector<Point>>& sets) {
  WcliqueInstance inst;
  inst.wg.graph = Graph(sets.size());
  inst.wg.dim = ground;
  inst.wg.weights.assign(sets.size(),
                         std::vector<std::uint32_t>(ground, 0));
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Point x : sets[i]) inst.wg.weights[i][x] = 1;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      bool disjoint = true;
      for (Point x : sets[i])
        if (inst.wg.weights[j][x]) {
          disjoint = false;
          break;
        }
      if (disjoint) inst.wg.graph.add_edge(Point(i), Point(j));
    }
  inst.target.assign(ground, 1);
  return inst;
}

}  // namespace synckit
