#include "synckit/perm.hpp"

#include <algorithm>
#include <numeric>

namespace synckit {

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (Point v : img_) {
    if (v >= img_.size() || seen[v])
      throw PreconditionError("image array is not a permutation");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

Perm Perm::from_one_based(const std::vector<Point>& images) {
  std::vector<Point> img(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 1 || images[i] > images.size())
      throw PreconditionError("point out of range in permutation");
    img[i] = images[i] - 1;
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (Point x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(img_.size());
  for (Point x = 0; x < img_.size(); ++x) inv[img_[x]] = x;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (degree() != o.degree())
    throw PreconditionError("composing permutations of different degree");
  std::vector<Point> img(img_.size());
  for (Point x = 0; x < img_.size(); ++x) img[x] = o.img_[img_[x]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::uint64_t ord = 1;
  for (Point x = 0; x < img_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    Point y = x;
    do {
      seen[y] = true;
      y = img_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(img_[i] + 1);
  }
  return s;
}

}  // namespace synckit
