#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "synckit/clique.hpp"
#include "synckit/graph.hpp"

namespace synckit {

// Graph whose vertices carry non-zero d-vectors of non-negative integers.
struct WeightedGraph {
  Graph graph;
  std::size_t dim = 0;
  std::vector<std::vector<std::uint32_t>> weights;  // one d-vector per vertex

  void validate() const;  // uniform dimension, no all-zero vector
};

// A clique whose vertex weights sum exactly to `target`, or certified
// absence. Deterministic for any worker count.
std::optional<std::vector<Point>> vector_weighted_clique(
    const WeightedGraph& wg, const std::vector<std::uint32_t>& target,
    const SearchLimits& lim = {});

// Instance file: "p wclique <n> <d>", then "w <v> <c1> ... <cd>" per vertex,
// DIMACS "e <u> <v>" edge lines, and one "t <c1> ... <cd>" target line.
struct WcliqueInstance {
  WeightedGraph wg;
  std::vector<std::uint32_t> target;
};

WcliqueInstance load_wclique(const std::string& path);
WcliqueInstance parse_wclique(std::istream& in, const std::string& origin);
void save_wclique(const WcliqueInstance& inst, const std::string& path);

}  // namespace synckit
