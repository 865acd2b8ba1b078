#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "synckit/common.hpp"

namespace synckit {

// A permutation of {0..n-1} stored as its image array. Composition is
// left-to-right: x^(a*b) = (x^a)^b, matching the usual right action.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t n);
  // Parses 1-based images, as they appear in .grp files.
  static Perm from_one_based(const std::vector<Point>& images);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& o) const;

  std::uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  const std::vector<Point>& images() const { return img_; }
  std::string to_string() const;  // 1-based, space separated

private:
  std::vector<Point> img_;
};

}  // namespace synckit
