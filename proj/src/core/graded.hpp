#pragma once

#include <vector>

#include "core/field.hpp"
#include "core/monomial.hpp"
#include "core/sparse.hpp"

namespace hodgekit {

/// Multiplication S^a x S^b -> S^{a+b} in monomial coordinates.
class GradedProduct {
 public:
  GradedProduct(int nvars, int a, int b, PrimeField field);

  SparseVector operator()(const SparseVector& x, const SparseVector& y) const;

  int left_degree() const noexcept { return a_; }
  int right_degree() const noexcept { return b_; }

 private:
  int n_;
  int a_;
  int b_;
  PrimeField field_;
  std::vector<Monomial> left_;
  std::vector<Monomial> right_;
};

}  // namespace hodgekit
