#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "synckit/bitset.hpp"
#include "synckit/common.hpp"
#include "synckit/group.hpp"

namespace synckit {

// Simple undirected graph on {0..n-1}; adjacency stored as packed boolean
// rows. Immutable by convention once built.
class Graph {
public:
  Graph() : n_(0) {}
  explicit Graph(std::size_t n) : n_(n), rows_(n, Bitset(n)) {}

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;

  void add_edge(Point u, Point v);
  bool has_edge(Point u, Point v) const { return rows_[u].test(v); }
  const Bitset& row(Point v) const { return rows_[v]; }
  std::size_t degree(Point v) const { return rows_[v].count(); }

  bool is_null() const { return edge_count() == 0; }
  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }

  // Common vertex degree if regular, -1 otherwise.
  std::int64_t regular_degree() const;

  Graph complement() const;

  std::vector<std::pair<Point, Point>> edges() const;  // u < v, lex order

  // DIMACS edge format, bit-exact: "p edge n m" then one "e u v" line per
  // edge, 1-based, u < v, lexicographically ordered.
  std::string to_dimacs() const;
  static Graph from_dimacs(std::istream& in, const std::string& origin);
  static Graph load_dimacs(const std::string& path);
  void save_dimacs(const std::string& path) const;

  bool operator==(const Graph& o) const = default;

private:
  std::size_t n_;
  std::vector<Bitset> rows_;
};

// Union of the selected pair-orbits as an edge set. Mask bits are 0-based
// orbit indices in the deterministic order of `po`. The null graph (empty
// mask) is only produced when allow_null is set.
Graph generalized_orbital_graph(const PairOrbits& po, std::uint64_t mask,
                                bool allow_null = false);

// Per-vertex adjacency contribution of a single pair-orbit; useful to
// assemble many masks without rescanning all pairs.
std::vector<Bitset> orbital_rows(const PairOrbits& po, std::size_t orbit);

// True iff applying g to every edge lands on an edge (g is an automorphism).
bool is_invariant_under(const Graph& g, const Perm& p);

}  // namespace synckit
