#pragma once

#include <cstdint>
#include <vector>

#include "synckit/common.hpp"

namespace synckit {

// Arithmetic tables for GF(p^k), elements encoded as integers 0..q-1 whose
// base-p digits, least significant first, are the polynomial coefficients.
// The modulus is the lexicographically least monic irreducible (coefficient
// tuple (c0,...,c_{k-1}) compared left to right). Tables are built once per
// q and cached.
class GF {
public:
  static const GF& get(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return add_[a * q_ + b];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[a * q_ + b];
  }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // x -> x^p, the Frobenius automorphism
  std::uint32_t frobenius(std::uint32_t a) const { return frob_[a]; }

private:
  explicit GF(std::uint32_t q);

  std::uint32_t q_, p_, k_;
  std::vector<std::uint32_t> mod_;  // c0..c_{k-1} of the monic modulus
  std::vector<std::uint32_t> add_, mul_, neg_, inv_, frob_;
};

}  // namespace synckit
