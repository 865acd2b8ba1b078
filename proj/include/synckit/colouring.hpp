#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/clique.hpp"
#include "synckit/graph.hpp"
#include "synckit/group.hpp"

namespace synckit {

// A proper vertex-colouring: classes partition the vertex set and every
// class is a coclique. Classes are kept sorted by minimal element.
struct Colouring {
  std::vector<std::vector<Point>> classes;
  std::size_t size() const { return classes.size(); }
};

struct ColouringOptions {
  std::uint64_t node_budget = 200'000'000;
  std::size_t max_class_size = 0;  // 0: unbounded
};

// A proper k-colouring or certified absence, by exact DSATUR-style
// backtracking with canonical class ordering and a deterministically chosen
// precoloured clique.
std::optional<Colouring> chromatic_le(const Graph& g, std::size_t k,
                                      const ColouringOptions& opts = {});

// A proper k-colouring in which every class is a union of <k_gens>-orbits,
// or certified absence of such a colouring (which does not bound chi).
// k_gens must be automorphisms of g.
std::optional<Colouring> classwise_invariant_colouring(
    const Graph& g, const std::vector<Perm>& k_gens, std::size_t k,
    const ColouringOptions& opts = {});

struct NonSyncCertificate {
  bool non_synchronizing = false;
  std::size_t omega = 0;
  std::vector<Point> clique;           // size omega when certified
  std::optional<Colouring> colouring;  // omega classes when certified
  std::string reason;                  // why the graph is not, when it is not
};

// Non-null, non-complete and chi = omega, decided exactly; the certificate
// carries the clique and matching colouring.
NonSyncCertificate is_non_synchronizing_graph(
    const Graph& g, const SearchLimits& clique_lim = {},
    const ColouringOptions& col_opts = {});

// colour classes rendered as "class <i>: v1 v2 ..." lines, 1-based
std::string colouring_to_text(const Colouring& c);

}  // namespace synckit
