#pragma once

#include <cstdint>
#include <vector>

#include "synckit/common.hpp"
#include "synckit/perm.hpp"

namespace synckit {

// Base and strong generating set, built with the deterministic Schreier-Sims
// algorithm (no randomization). Base points are the smallest moved point at
// each level, after an optional forced prefix; orbits are in BFS discovery
// order, so two builds from the same generator list are identical.
class StabChain {
public:
  StabChain(std::size_t degree, const std::vector<Perm>& generators,
            const std::vector<Point>& base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }

  BigInt order() const;
  bool contains(const Perm& g) const;

  Point base_point(std::size_t level) const { return levels_[level].base; }
  // Orbit of base_point(level) under the strong generators fixing the first
  // `level` base points; discovery order, orbit[0] is the base point.
  const std::vector<Point>& level_orbit(std::size_t level) const {
    return levels_[level].orbit;
  }
  bool in_level_orbit(std::size_t level, Point p) const {
    return levels_[level].seen[p];
  }

  // Transversal element u with base_point(level)^u = p, for p in the level
  // orbit.
  Perm transversal(std::size_t level, Point p) const;

  // Strong generators fixing the first `fixed` base points pointwise. These
  // generate the pointwise stabilizer of that base prefix.
  std::vector<Perm> stabilizer_generators(std::size_t fixed) const;

  const std::vector<Perm>& strong_generators() const { return sgens_; }

  // Visits every group element exactly once in a fixed order. Only sensible
  // for small groups; `limit` aborts with ResourceError when exceeded.
  template <class F>
  void for_each_element(F&& f, std::uint64_t limit = UINT64_MAX) const {
    Perm id = Perm::identity(degree_);
    std::uint64_t count = 0;
    enumerate(0, id, f, count, limit);
  }

private:
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gen_idx;    // indices into sgens_ fixing prefix
    std::vector<Point> orbit;
    std::vector<bool> seen;
    std::vector<std::int32_t> parent_gen;  // index into gen_idx, -1 at base
    std::vector<Point> parent_pt;
  };

  void append_level(Point base);
  void ensure_moved_base(const Perm& g);
  void rebuild_level(std::size_t level);
  // Strips g through levels [from, depth()); returns residue and stop level.
  std::pair<Perm, std::size_t> strip(std::size_t from, const Perm& g) const;
  // Verifies the Schreier condition at `level`; on failure adds the first
  // offending residue as a strong generator and returns its level.
  std::optional<std::size_t> verify_level(std::size_t level);
  void add_strong(const Perm& h);

  template <class F>
  void enumerate(std::size_t level, const Perm& acc, F&& f,
                 std::uint64_t& count, std::uint64_t limit) const {
    if (level == levels_.size()) {
      if (++count > limit)
        throw ResourceError("element enumeration limit exceeded");
      f(acc);
      return;
    }
    for (Point p : levels_[level].orbit)
      enumerate(level + 1, transversal(level, p) * acc, f, count, limit);
  }

  std::size_t degree_;
  std::vector<Perm> sgens_;
  std::vector<Level> levels_;
};

}  // namespace synckit
