#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/graph.hpp"
#include "synckit/group.hpp"

namespace synckit {

struct CliqueWitness {
  enum class Kind { Maximum, SizeK, WeightTarget };
  std::vector<Point> vertices;  // pairwise adjacent, ascending
  Kind kind = Kind::Maximum;
};

struct SearchLimits {
  std::uint64_t node_budget = 400'000'000;
  unsigned workers = 1;
  int split_depth = -1;  // -1: auto from the instance size
  int sym_depth = 3;     // orbit pruning applies while |clique| < sym_depth
};

struct CliqueResult {
  std::size_t omega = 0;
  std::vector<Point> witness;
  std::uint64_t nodes = 0;
};

// Exact clique number with a witness. `sym` (a group of automorphisms of g)
// only prunes symmetric branches; the computed omega does not depend on it.
// Throws ResourceError carrying the best clique size found when the node
// budget runs out.
CliqueResult max_clique(const Graph& g, const GroupSpec* sym = nullptr,
                        const SearchLimits& lim = {});

// A clique of exactly k vertices, or certified absence. When `fix` is given,
// the search is restricted to cliques that are unions of <fix>-orbits;
// absence under `fix` does not prove global absence.
std::optional<std::vector<Point>> find_clique_of_size(
    const Graph& g, std::size_t k, const GroupSpec* sym = nullptr,
    const std::vector<Perm>* fix = nullptr, const SearchLimits& lim = {});

// All cliques of size exactly k, ascending-vertex, in deterministic order.
// Throws ResourceError if more than max_count are found.
std::vector<std::vector<Point>> enumerate_cliques_of_size(
    const Graph& g, std::size_t k, std::size_t max_count,
    const SearchLimits& lim = {});

}  // namespace synckit
