#pragma once

#include <cstdint>
#include <vector>

#include "core/context.hpp"
#include "core/linalg.hpp"
#include "core/polynomial.hpp"
#include "core/sparse.hpp"

namespace hodgekit {

/// Linear subspace of the graded piece S^k of GF(p)[x0..x_{n-1}], held as a
/// reduced row echelon basis in monomial coordinates (monomial_basis order).
/// Immutable after construction.
class GradedSubspace {
 public:
  /// The zero subspace of S^k.
  GradedSubspace(int nvars, int degree, PrimeField field);

  static GradedSubspace full(int nvars, int degree, PrimeField field);
  static GradedSubspace span(int nvars, int degree, const std::vector<SparseVector>& generators,
                             const ComputeContext& ctx);
  /// Row space of an echelon form built over S^k coordinates.
  static GradedSubspace from_echelon(int nvars, int degree, const RowEchelon& echelon);
  /// Span of homogeneous polynomials of the given degree.
  static GradedSubspace span(const std::vector<Polynomial>& generators, int nvars, int degree,
                             const ComputeContext& ctx);

  int nvars() const noexcept { return n_; }
  int degree() const noexcept { return k_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  std::size_t codim() const noexcept { return ambient_ - basis_.size(); }
  bool is_full() const noexcept { return codim() == 0; }

  const std::vector<SparseVector>& basis() const noexcept { return basis_; }
  /// Pivot column of each basis row, increasing.
  std::vector<std::uint32_t> pivots() const;
  /// Non-pivot monomial indices, increasing; they index a complement.
  const std::vector<std::uint32_t>& free_columns() const noexcept { return free_; }

  /// Representative of v + this supported on free columns.
  SparseVector normal_form(const SparseVector& v) const;
  /// normal_form(v) expressed in positions of free_columns().
  SparseVector quotient_coordinates(const SparseVector& v) const;

  bool contains(const SparseVector& v) const { return normal_form(v).empty(); }
  bool contains(const GradedSubspace& other) const;

  std::vector<Polynomial> basis_polynomials() const;

  bool operator==(const GradedSubspace& o) const {
    return n_ == o.n_ && k_ == o.k_ && field_ == o.field_ && basis_ == o.basis_;
  }

 private:
  void index_rows();
  void check_vector(const SparseVector& v) const;

  int n_;
  int k_;
  PrimeField field_;
  std::size_t ambient_;
  std::vector<SparseVector> basis_;
  std::vector<std::int32_t> row_of_col_;
  std::vector<std::uint32_t> free_;
};

/// Throws InvalidArgument (ambient mismatch) or ModulusMismatch.
void require_same_ambient(const GradedSubspace& a, const GradedSubspace& b);

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b,
                            const ComputeContext& ctx);
/// Zassenhaus intersection.
GradedSubspace subspace_intersection(const GradedSubspace& a, const GradedSubspace& b,
                                     const ComputeContext& ctx);

}  // namespace hodgekit
