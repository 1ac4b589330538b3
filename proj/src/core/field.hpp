#pragma once

#include <cstdint>
#include <string>

#include "core/error.hpp"

namespace hodgekit {

using Residue = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 65521;
inline constexpr std::uint32_t kCrossCheckPrime = 32003;

constexpr bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2)
    if (p % q == 0) return false;
  return true;
}

/// Arithmetic in GF(p) for a prime p < 2^31. Residues are kept in [0, p) so
/// a sum of two fits in 32 bits and a product in 64.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    require(p < (1u << 31), ErrorCode::InvalidArgument,
            "modulus " + std::to_string(p) + " must be below 2^31");
    require(is_prime(p), ErrorCode::InvalidArgument,
            "modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t modulus() const noexcept { return p_; }

  Residue add(Residue a, Residue b) const noexcept {
    Residue s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept {
    return static_cast<Residue>(std::uint64_t{a} * b % p_);
  }

  Residue pow(Residue a, std::uint64_t e) const noexcept {
    Residue r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Residue inv(Residue a) const {
    require(a % p_ != 0, ErrorCode::InvalidArgument, "inverse of zero");
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Residue>(t);
  }

  Residue from_int(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<Residue>(m);
  }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Residue a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  bool operator==(const PrimeField& o) const noexcept { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace hodgekit
