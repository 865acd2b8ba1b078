#include "synckit/stabchain.hpp"

#include <algorithm>

namespace synckit {

StabChain::StabChain(std::size_t degree, const std::vector<Perm>& generators,
                     const std::vector<Point>& base_prefix)
    : degree_(degree) {
  for (Point b : base_prefix) {
    if (b >= degree_) throw PreconditionError("base point out of range");
    append_level(b);
  }
  for (const Perm& g : generators) {
    if (g.degree() != degree_)
      throw PreconditionError("generator degree mismatch");
    if (g.is_identity()) continue;
    ensure_moved_base(g);
    sgens_.push_back(g);
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_level(i);

  // Bottom-up Schreier verification; a failure adds a residue at a deeper
  // level and verification resumes there.
  if (!levels_.empty()) {
    std::size_t i = levels_.size() - 1;
    while (true) {
      auto broken = verify_level(i);
      if (broken) {
        i = *broken;
      } else if (i == 0) {
        break;
      } else {
        --i;
      }
    }
  }
}

void StabChain::append_level(Point base) {
  Level L;
  L.base = base;
  L.seen.assign(degree_, false);
  L.parent_gen.assign(degree_, -1);
  L.parent_pt.assign(degree_, 0);
  L.orbit.push_back(base);
  L.seen[base] = true;
  levels_.push_back(std::move(L));
}

void StabChain::ensure_moved_base(const Perm& g) {
  for (const Level& L : levels_)
    if (g[L.base] != L.base) return;
  Point b = 0;
  while (g[b] == b) ++b;
  append_level(b);
}

void StabChain::rebuild_level(std::size_t level) {
  Level& L = levels_[level];
  L.gen_idx.clear();
  for (std::uint32_t gi = 0; gi < sgens_.size(); ++gi) {
    bool fixes_prefix = true;
    for (std::size_t j = 0; j < level; ++j)
      if (sgens_[gi][levels_[j].base] != levels_[j].base) {
        fixes_prefix = false;
        break;
      }
    if (fixes_prefix) L.gen_idx.push_back(gi);
  }
  L.orbit.clear();
  L.seen.assign(degree_, false);
  L.parent_gen.assign(degree_, -1);
  L.orbit.push_back(L.base);
  L.seen[L.base] = true;
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    Point p = L.orbit[i];
    for (std::size_t k = 0; k < L.gen_idx.size(); ++k) {
      Point q = sgens_[L.gen_idx[k]][p];
      if (!L.seen[q]) {
        L.seen[q] = true;
        L.parent_gen[q] = std::int32_t(k);
        L.parent_pt[q] = p;
        L.orbit.push_back(q);
      }
    }
  }
}

Perm StabChain::transversal(std::size_t level, Point p) const {
  const Level& L = levels_[level];
  if (!L.seen[p]) throw PreconditionError("point not in level orbit");
  std::vector<std::int32_t> path;
  Point q = p;
  while (q != L.base) {
    path.push_back(L.parent_gen[q]);
    q = L.parent_pt[q];
  }
  Perm u = Perm::identity(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u * sgens_[L.gen_idx[*it]];
  return u;
}

std::pair<Perm, std::size_t> StabChain::strip(std::size_t from,
                                              const Perm& g) const {
  Perm w = g;
  std::size_t lvl = from;
  for (; lvl < levels_.size(); ++lvl) {
    if (w.is_identity()) return {w, lvl};
    Point p = w[levels_[lvl].base];
    if (!levels_[lvl].seen[p]) return {w, lvl};
    if (p != levels_[lvl].base) w = w * transversal(lvl, p).inverse();
  }
  return {w, lvl};
}

void StabChain::add_strong(const Perm& h) {
  ensure_moved_base(h);
  sgens_.push_back(h);
}

std::optional<std::size_t> StabChain::verify_level(std::size_t level) {
  rebuild_level(level);
  Level& L = levels_[level];
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    Point p = L.orbit[i];
    Perm up = transversal(level, p);
    for (std::size_t k = 0; k < L.gen_idx.size(); ++k) {
      const Perm& s = sgens_[L.gen_idx[k]];
      Point q = s[p];
      Perm w = up * s * transversal(level, q).inverse();
      if (w.is_identity()) continue;
      auto [h, lvl] = strip(level + 1, w);
      if (h.is_identity()) continue;
      add_strong(h);
      // rebuild the levels whose generator sets may have grown
      for (std::size_t j = level + 1; j < levels_.size(); ++j)
        rebuild_level(j);
      std::size_t target = std::min(lvl, levels_.size() - 1);
      return target;
    }
  }
  return std::nullopt;
}

BigInt StabChain::order() const {
  BigInt o = 1;
  for (const Level& L : levels_) o *= BigInt(std::uint64_t(L.orbit.size()));
  return o;
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [h, lvl] = strip(0, g);
  (void)lvl;
  return h.is_identity();
}

std::vector<Perm> StabChain::stabilizer_generators(std::size_t fixed) const {
  if (fixed > levels_.size()) return {};  // trivial group below the chain
  std::vector<Perm> gens;
  for (const Perm& g : sgens_) {
    bool fixes = true;
    for (std::size_t j = 0; j < fixed; ++j)
      if (g[levels_[j].base] != levels_[j].base) {
        fixes = false;
        break;
      }
    if (fixes) gens.push_back(g);
  }
  return gens;
}

}  // namespace synckit
