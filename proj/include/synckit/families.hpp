#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synckit/colouring.hpp"
#include "synckit/graph.hpp"

namespace synckit {

// A constructed graph from one of the combinatorial or geometric families,
// with its vertex labelling and, when certified, an explicit clique and a
// proper colouring of the same size (which pins omega = chi exactly).
struct FamilyGraph {
  Graph graph;
  std::string family;
  std::map<std::string, long> params;
  std::size_t expected_omega = 0;
  std::vector<std::string> labels;     // vertex -> printable object
  std::vector<Point> clique;           // size expected_omega when certified
  std::optional<Colouring> colouring;  // expected_omega classes when certified

  bool certified() const { return colouring.has_value(); }
};

struct FamilyOptions {
  bool certify = true;
  std::size_t max_candidates = 500000;
  std::uint64_t cover_budget = 400'000'000;
  SearchLimits search;  // for seed coclique / clique searches
};

// Hamming graph H(d,m): m^d words, adjacent when they differ in one
// coordinate. omega = chi = m via the last-coordinate clique and the
// coordinate-sum colouring.
FamilyGraph hamming(std::size_t d, std::size_t m,
                    const FamilyOptions& opts = {});

// Complement of the Kneser graph K(n,k) for 1 < k < n, k | n: k-subsets,
// adjacent when they intersect. omega = C(n-1,k-1); the colouring is a
// partition of the k-subsets into perfect partitions (Baranyai), found by
// exact cover.
FamilyGraph kneser_complement(std::size_t n, std::size_t k,
                              const FamilyOptions& opts = {});

// 3-subsets of {1..n}, adjacent when the intersection has size 2; requires
// n >= 9, n = 1 or 3 (mod 6). omega = n-2; colouring classes are disjoint
// Steiner triple systems found by exact cover.
FamilyGraph johnson_distance_one(std::size_t n, const FamilyOptions& opts = {});

// Partitions of {1..n} into k-subsets (k > 1, k | n, n/k > 2), adjacent when
// they share no part. omega = C(n-1,k-1); carries the fixed-point colouring
// and a Baranyai clique found by exact cover.
FamilyGraph partition_graph(std::size_t n, std::size_t k,
                            const FamilyOptions& opts = {});

// Throws unless clique/colouring sizes agree with expected_omega and both
// certificates check out against the graph.
void verify_family_certificate(const FamilyGraph& fg);

// Sidecar labelling: one "v <index> <object>" line per vertex, 1-based.
std::string labels_to_text(const FamilyGraph& fg);

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<Point>> subsets_lex(std::size_t n, std::size_t k);

// Generators of Sym(n) acting on an indexed universe of sorted point sets.
GroupSpec symmetric_action_on_sets(std::size_t n,
                                   const std::vector<std::vector<Point>>& sets);

}  // namespace synckit
