#pragma once

#include <vector>

#include "synckit/graph.hpp"
#include "synckit/perm.hpp"

namespace synckit::check {

bool clique(const Graph& g, const std::vector<Point>& verts);
bool coclique(const Graph& g, const std::vector<Point>& verts);

// classes partition {0..n-1}
bool partition(std::size_t n, const std::vector<std::vector<Point>>& classes);

// every class a coclique; with require_partition also a partition
bool proper_colouring(const Graph& g,
                      const std::vector<std::vector<Point>>& classes,
                      bool require_partition = true);

bool invariant(const Graph& g, const std::vector<Perm>& gens);

// pairwise disjoint sets whose union is the ground set
bool exact_cover_of(std::size_t ground,
                    const std::vector<std::vector<Point>>& parts);

}  // namespace synckit::check
