#include "core/graded.hpp"

#include "core/error.hpp"

namespace hodgekit {

GradedProduct::GradedProduct(int nvars, int a, int b, PrimeField field)
    : n_(nvars),
      a_(a),
      b_(b),
      field_(field),
      left_(monomial_basis(nvars, a)),
      right_(monomial_basis(nvars, b)) {
  require(a >= 0 && b >= 0, ErrorCode::InvalidArgument, "negative degree in product");
}

SparseVector GradedProduct::operator()(const SparseVector& x, const SparseVector& y) const {
  std::vector<std::pair<std::uint32_t, Residue>> terms;
  terms.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Monomial& mx = left_[x.idx[i]];
    for (std::size_t j = 0; j < y.size(); ++j)
      terms.emplace_back(static_cast<std::uint32_t>(product_index(mx, right_[y.idx[j]])),
                         field_.mul(x.val[i], y.val[j]));
  }
  return normalize(std::move(terms), field_);
}

}  // namespace hodgekit
