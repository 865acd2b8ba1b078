#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/common.hpp"
#include "synckit/group.hpp"
#include "synckit/wclique.hpp"

namespace synckit {

// Exact set cover of {0..ground-1} from the listed candidate sets, by
// dancing links. Column choice is the fewest-candidates point, ties by
// index, so the search is deterministic. Returns indices of the chosen
// candidates in ascending order, or nullopt when no cover exists.
std::optional<std::vector<std::size_t>> exact_cover(
    std::size_t ground, const std::vector<std::vector<Point>>& sets,
    std::uint64_t node_budget = 100'000'000);

// An H-invariant exact cover instance: candidates are the G-orbits of the
// seed subsets; the chosen family of sets must be closed under <H>.
struct CoverInstance {
  std::size_t ground = 0;
  std::vector<std::vector<Point>> seeds;  // subsets of the ground set
  GroupSpec group;                        // G acting on the ground set
  std::vector<Perm> h_gens;               // H <= G (may be empty: trivial)
};

struct CoverOptions {
  std::size_t max_candidates = 200000;
  std::uint64_t node_budget = 100'000'000;
};

// Either an exact cover of the ground set drawn from the G-orbits of the
// seeds whose set of parts is <H>-invariant, or nullopt when none exists.
// Parts are sorted by minimal element.
std::optional<std::vector<std::vector<Point>>> exact_cover_invariant(
    const CoverInstance& inst, const CoverOptions& opts = {});

// G-orbit closure of the seeds, deduplicated, deterministic order.
std::vector<std::vector<Point>> expand_seed_orbits(
    const CoverInstance& inst, std::size_t max_candidates);

// The characteristic-vector weighted-clique encoding of a plain exact cover
// instance: vertices are the sets, edges join disjoint sets, target is the
// all-ones vector.
WcliqueInstance cover_as_wclique(std::size_t ground,
                                 const std::vector<std::vector<Point>>& sets);

}  // namespace synckit
