#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "synckit/common.hpp"
#include "synckit/perm.hpp"
#include "synckit/stabchain.hpp"

namespace synckit {

enum class OnssType { Affine, AlmostSimple, Diagonal, HammingWreath, Unknown };

std::string to_string(OnssType t);
OnssType onss_type_from_string(const std::string& s);

struct AffineParams {
  std::uint32_t p = 0;  // prime
  std::uint32_t d = 0;  // dimension, p^d = degree
};

// A permutation group given by generators, plus optional catalogue metadata.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  std::string name;
  OnssType onss_type = OnssType::Unknown;
  std::optional<AffineParams> affine;

  static GroupSpec load_grp(const std::string& path);
  static GroupSpec parse_grp(std::istream& in, const std::string& origin);
  void save_grp(const std::string& path) const;
};

// Orbits of <gens> on {0..n-1}, each orbit in BFS discovery order, orbits
// ordered by minimal point.
std::vector<std::vector<Point>> point_orbits(const std::vector<Perm>& gens,
                                             std::size_t n);

bool is_transitive(const GroupSpec& G);

BigInt group_order(const GroupSpec& G);

// index of the unordered pair {a,b}, a < b, in lexicographic order
inline std::size_t pair_index(std::size_t n, Point a, Point b) {
  return a * n - a * (a + 1) / 2 + (b - a - 1);
}
std::pair<Point, Point> pair_from_index(std::size_t n, std::size_t id);

// The G-orbits on unordered 2-subsets of the domain, in deterministic order
// (by lexicographically minimal pair).
struct PairOrbits {
  std::size_t n = 0;
  std::size_t m = 0;                         // number of orbits
  std::vector<std::uint32_t> orbit_of;       // pair index -> orbit (0-based)
  std::vector<std::pair<Point, Point>> reps; // lex-min pair per orbit
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> orbit_degree;     // vertex degree of that orbital graph
};

PairOrbits orbits_on_2subsets(const GroupSpec& G);

bool is_2set_transitive(const GroupSpec& G);

// True iff the transitive group G preserves no non-trivial partition;
// computed by minimal-block closure for every non-initial point.
bool is_primitive(const GroupSpec& G);

// Point stabilizer as a new GroupSpec (strong generators fixing x).
GroupSpec stabilizer(const GroupSpec& G, Point x);

// Action of G on the right cosets of <h_gens>. Point 1 (index 0) is the
// coset H itself. Throws PreconditionError if <h_gens> is not a subgroup of
// <G>, ResourceError if the index exceeds max_index.
GroupSpec coset_action(const GroupSpec& G, const std::vector<Perm>& h_gens,
                       std::size_t max_index = 10000);

// Canonical affine indexing: internal point i <-> the vector in GF(p)^d
// whose base-p digits, least significant first, are those of i.
std::vector<std::uint32_t> affine_vector_of_point(Point i, std::uint32_t p,
                                                  std::uint32_t d);
Point affine_point_of_vector(const std::vector<std::uint32_t>& v,
                             std::uint32_t p);
// The permutation x -> x + v of GF(p)^d under the canonical indexing.
Perm translation_perm(const std::vector<std::uint32_t>& v, std::uint32_t p);

// Verifies the GroupSpec affine invariant: degree = p^d and the basis
// translations lie in the group. Throws PreconditionError on failure.
void validate_affine(const GroupSpec& G, const StabChain& chain);

}  // namespace synckit
