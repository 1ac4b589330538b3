#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hodgekit {

inline constexpr int kMaxVars = 12;
inline constexpr int kMaxExponent = 255;

/// Number of monomials of degree k in n variables, C(k+n-1, n-1); zero for
/// k < 0. Throws ParameterTooLarge when the value does not fit in 63 bits.
std::uint64_t dim_graded(int n, int k);

/// Exponent vector in at most kMaxVars variables. Ordering is graded
/// lexicographic with x0 > x1 > ... ; "greater" monomials come first in
/// every basis listing.
class Monomial {
 public:
  Monomial() = default;
  Monomial(int nvars, std::span<const int> exponents);
  Monomial(int nvars, std::initializer_list<int> exponents)
      : Monomial(nvars, std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial one(int nvars);
  static Monomial variable(int nvars, int i);

  int nvars() const noexcept { return n_; }
  int degree() const noexcept { return deg_; }
  int operator[](int i) const noexcept { return e_[i]; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const noexcept;
  /// o / this; requires divides(o).
  Monomial quotient_of(const Monomial& o) const;

  /// Position in monomial_basis(nvars(), degree()).
  std::size_t index() const noexcept;

  std::string to_string() const;

  std::strong_ordering operator<=>(const Monomial& o) const noexcept;
  bool operator==(const Monomial& o) const noexcept = default;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
  std::uint16_t deg_ = 0;
};

/// Index of a*b in monomial_basis(n, deg a + deg b), without forming the
/// product. Both factors must share the ring.
std::size_t product_index(const Monomial& a, const Monomial& b) noexcept;

/// All monomials of degree k in n variables, greatest first.
std::vector<Monomial> monomial_basis(int n, int k);

}  // namespace hodgekit
