#include "synckit/gf.hpp"

#include <map>
#include <mutex>

namespace synckit {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // coefficients, c0 first

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  // m is monic of degree k (coefficients c0..c_{k-1}, leading 1 implicit)
  const std::size_t k = m.size();
  while (a.size() > k) {
    std::uint32_t lead = a.back();
    a.pop_back();
    if (lead == 0) continue;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t pos = a.size() - k + i;
      a[pos] = (a[pos] + p - (lead * m[i]) % p) % p;
    }
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

bool poly_is_zero(const Poly& a) {
  for (auto c : a)
    if (c) return false;
  return true;
}

// divisibility of the monic degree-k polynomial (coeffs mod_, leading 1) by
// the monic polynomial d (explicit coefficients including leading 1)
bool divides(const Poly& divisor, const Poly& mod_coeffs, std::uint32_t p) {
  Poly f(mod_coeffs);
  f.push_back(1);  // leading coefficient
  // long division
  Poly r(f);
  while (r.size() >= divisor.size() && !poly_is_zero(r)) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() < divisor.size()) break;
    std::uint32_t lead = r.back();
    // divisor is monic
    std::size_t shift = r.size() - divisor.size();
    for (std::size_t i = 0; i < divisor.size(); ++i)
      r[shift + i] = (r[shift + i] + p - (lead * divisor[i]) % p) % p;
  }
  return poly_is_zero(r);
}

bool irreducible(const Poly& mod_coeffs, std::uint32_t p, std::uint32_t k) {
  // trial division by all monic polynomials of degree 1..k/2
  for (std::uint32_t deg = 1; deg * 2 <= k; ++deg) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly d(deg + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < deg; ++i) {
        d[i] = std::uint32_t(c % p);
        c /= p;
      }
      d[deg] = 1;
      if (divides(d, mod_coeffs, p)) return false;
    }
  }
  return true;
}

}  // namespace

GF::GF(std::uint32_t q) : q_(q) {
  if (q < 2 || q > 256) throw PreconditionError("field order out of range");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p)) throw PreconditionError("field order is not a prime power");
  std::uint32_t k = 0;
  std::uint32_t t = q;
  while (t > 1) {
    if (t % p != 0) throw PreconditionError("field order is not a prime power");
    t /= p;
    ++k;
  }
  p_ = p;
  k_ = k;

  if (k_ == 1) {
    mod_.assign({0});  // unused for prime fields
  } else {
    // least monic irreducible by coefficient tuple (c0,...,c_{k-1})
    bool found = false;
    std::vector<std::uint32_t> radix(k_, 0);
    while (!found) {
      if (irreducible(radix, p_, k_)) {
        mod_ = radix;
        found = true;
        break;
      }
      // increment the tuple right-to-left so that (c0,..) order is lex
      std::size_t pos = k_;
      while (pos-- > 0) {
        if (++radix[pos] < p_) break;
        radix[pos] = 0;
        if (pos == 0) throw Error("no irreducible polynomial found");
      }
    }
  }

  auto to_poly = [&](std::uint32_t a) {
    Poly v(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
      v[i] = a % p_;
      a /= p_;
    }
    return v;
  };
  auto from_poly = [&](const Poly& v) {
    std::uint32_t a = 0;
    for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + (i < v.size() ? v[i] : 0);
    return a;
  };

  add_.resize(std::size_t(q_) * q_);
  mul_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly pa = to_poly(a);
    Poly na(k_);
    for (std::uint32_t i = 0; i < k_; ++i) na[i] = (p_ - pa[i]) % p_;
    neg_[a] = from_poly(na);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly pb = to_poly(b);
      Poly s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (pa[i] + pb[i]) % p_;
      add_[std::size_t(a) * q_ + b] = from_poly(s);
      Poly prod = k_ == 1 ? Poly{(a * b) % p_}
                          : poly_mod(poly_mul(pa, pb, p_), mod_, p_);
      mul_[std::size_t(a) * q_ + b] = from_poly(prod);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[std::size_t(a) * q_ + b] == 1) inv_[a] = b;
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t r = a;
    for (std::uint32_t i = 1; i < p_; ++i) r = mul_[std::size_t(r) * q_ + a];
    frob_[a] = r;
  }
}

std::uint32_t GF::inv(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("inverse of zero");
  return inv_[a];
}

std::uint32_t GF::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

const GF& GF::get(std::uint32_t q) {
  static std::mutex mutex;
  static std::map<std::uint32_t, const GF*> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, new GF(q)).first;
  return *it->second;
}

}  // namespace synckit
