#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "core/field.hpp"
#include "core/monomial.hpp"
#include "core/sparse.hpp"

namespace hodgekit {

/// Polynomial in n variables over GF(p). Terms are kept greatest monomial
/// first and never hold a zero coefficient.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Residue, std::greater<>>;

  Polynomial(int nvars, PrimeField field);

  static Polynomial constant(int nvars, PrimeField field, Residue c);
  static Polynomial term(PrimeField field, const Monomial& m, Residue c = 1);
  /// x0^N + ... + x_{n-1}^N
  static Polynomial fermat(int nvars, int degree, PrimeField field);
  /// Homogeneous polynomial of degree k from coordinates in monomial_basis(n, k).
  static Polynomial from_vector(const SparseVector& v, int nvars, int k, PrimeField field);

  int nvars() const noexcept { return n_; }
  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous() const noexcept;
  /// Common degree of all terms; nullopt for zero or inhomogeneous input.
  std::optional<int> degree() const noexcept;

  Residue coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Residue c);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Residue c) const;
  Polynomial derivative(int var) const;

  /// Coordinates in monomial_basis(n, k); requires homogeneity of degree k
  /// (the zero polynomial is accepted for any k).
  SparseVector to_vector(int k) const;

  /// Text form accepted by parse_polynomial.
  std::string to_string() const;

  bool operator==(const Polynomial& o) const {
    return n_ == o.n_ && field_ == o.field_ && terms_ == o.terms_;
  }

 private:
  void check_compatible(const Polynomial& o) const;

  int n_;
  PrimeField field_;
  Terms terms_;
};

Polynomial multiply(const Polynomial& a, const Polynomial& b);

/// Parses `c*x0^a0*x1^a1*... + ...`; whitespace is ignored, coefficients
/// and `^1` may be omitted. Throws ErrorCode::Parse.
Polynomial parse_polynomial(std::string_view text, int nvars, PrimeField field);

}  // namespace hodgekit
