#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "core/context.hpp"
#include "core/sparse.hpp"

namespace hodgekit {

struct RankProfile {
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Incremental row echelon form over GF(p).
///
/// Stored rows have a leading 1 in a column no other stored row leads in;
/// tails are not back-substituted until reduced_rows() is called. Columns
/// are eliminated in increasing index order, so the caller controls pivot
/// order through the coordinate numbering.
class RowEchelon {
 public:
  RowEchelon(PrimeField field, std::size_t ncols,
             std::uint64_t entry_budget = std::numeric_limits<std::uint64_t>::max());

  /// Reduces v and keeps a nonzero remainder as a new row. Returns true when
  /// the rank grew. Throws SizeBudget when stored entries exceed the budget.
  bool insert(const SparseVector& v);

  /// v with every pivot column eliminated; empty iff v lies in the span.
  SparseVector remainder(const SparseVector& v) const;
  bool in_span(const SparseVector& v) const { return remainder(v).empty(); }

  /// Reduced row echelon basis, sorted by pivot column.
  std::vector<SparseVector> reduced_rows() const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return ncols_; }
  bool full() const noexcept { return rows_.size() == ncols_; }
  std::uint64_t stored_entries() const noexcept { return stored_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  PrimeField field_;
  std::size_t ncols_;
  std::uint64_t budget_;
  std::uint64_t stored_ = 0;
  std::vector<std::int32_t> pivot_row_;
  std::vector<SparseVector> rows_;
};

/// Rank of a dense row-major matrix; the buffer is consumed.
std::size_t dense_rank(std::vector<Residue> cells, std::size_t rows, std::size_t cols,
                       const PrimeField& field);

/// Exact rank and kernel dimension (kernel of the map x -> M x, so
/// kernel_dim = cols - rank). Dense elimination above the density threshold,
/// sparse incremental elimination otherwise.
RankProfile rank_profile(const SparseMatrix& m, const ComputeContext& ctx);

/// Rank of the span of `vectors` in a space of dimension `length`. Stops as
/// soon as the rank reaches `cap`.
std::size_t rank_of_vectors(const std::vector<SparseVector>& vectors, std::size_t length,
                            const ComputeContext& ctx,
                            std::size_t cap = std::numeric_limits<std::size_t>::max());

/// Basis of { x : sum_j x_j images[j] = 0 } in coordinates of the source
/// (dimension images.size()); images live in a space of dimension target_dim.
std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images,
                                       std::size_t target_dim, const ComputeContext& ctx);

/// Throws SizeBudget if `cells` exceeds the budget.
void check_budget(std::uint64_t cells, const Limits& limits, const char* what);

}  // namespace hodgekit
