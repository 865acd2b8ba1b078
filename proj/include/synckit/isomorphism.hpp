#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/graph.hpp"

namespace synckit {

struct IsoOptions {
  std::uint64_t node_budget = 10'000'000;
  bool use_spectrum = true;  // eigenvalue multiset screen for n <= 300
};

// An edge-preserving bijection a -> b, or nullopt. Invariant screening
// (degree sequence, triangle counts, eigenvalue multiset) precedes a
// partition-refinement backtracking search. Throws ResourceError when the
// node budget is exceeded; callers that use matching as a shortcut treat
// that as "no match found".
std::optional<std::vector<Point>> find_isomorphism(const Graph& a,
                                                   const Graph& b,
                                                   const IsoOptions& opts = {});

bool is_isomorphic(const Graph& a, const Graph& b, const IsoOptions& opts = {});

}  // namespace synckit
