#pragma once

#include <cstdint>
#include <vector>

#include "synckit/families.hpp"
#include "synckit/gf.hpp"

namespace synckit {

// Projective space machinery over GF(q). Points are normalized coordinate
// vectors (first non-zero entry 1), enumerated in lexicographic order, so
// indices are canonical.
struct ProjectiveSpace {
  std::uint32_t q = 0;
  std::size_t vdim = 0;  // vector-space dimension (projective dim + 1)
  std::vector<std::vector<std::uint32_t>> points;

  static ProjectiveSpace make(std::uint32_t q, std::size_t vdim);
  Point index_of(std::vector<std::uint32_t> v) const;  // normalizes
  std::vector<std::uint32_t> normalize(std::vector<std::uint32_t> v) const;
  std::string label(Point i) const;  // "[c1:c2:...:ck]"
  // all points on the projective line through two distinct points
  std::vector<Point> line_through(Point a, Point b) const;
};

// Line graph of PG(3,q): vertices are the lines, adjacent when they share a
// point. omega = chi = q^2+q+1; colour classes are the spreads of a packing
// found by exact cover over all spreads. q in {2,3,4}.
FamilyGraph pg3_line_graph(std::uint32_t q, const FamilyOptions& opts = {});

// Point graph of the Hermitian polar space H(3,q^2): isotropic points of a
// nondegenerate Hermitian form on GF(q^2)^4, adjacent when collinear.
// omega = chi = q^2+1; classes are a fan of ovoids. q in {2,3}.
FamilyGraph hermitian_point_graph(std::uint32_t q,
                                  const FamilyOptions& opts = {});

// Points of PG(2,q^2) off the Hermitian curve, adjacent when their joining
// line is a tangent. omega = chi = q^2. q in {2,3}.
FamilyGraph nu3_graph(std::uint32_t q, const FamilyOptions& opts = {});

// Complement of the point graph of the symplectic space W(3,q), q a power
// of two. omega = chi = q^2+1 via an ovoid and a spread. q in {2,4}.
FamilyGraph symplectic_complement_graph(std::uint32_t q,
                                        const FamilyOptions& opts = {});

}  // namespace synckit
