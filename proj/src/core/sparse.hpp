#pragma once

#include <cstdint>
#include <vector>

#include "core/field.hpp"

namespace hodgekit {

/// Sparse vector over GF(p): strictly increasing indices, no stored zeros.
struct SparseVector {
  std::vector<std::uint32_t> idx;
  std::vector<Residue> val;

  std::size_t size() const noexcept { return idx.size(); }
  bool empty() const noexcept { return idx.empty(); }
  void push(std::uint32_t i, Residue v) {
    idx.push_back(i);
    val.push_back(v);
  }
  bool operator==(const SparseVector&) const = default;
};

/// Row-major sparse matrix; rows are SparseVectors of length `cols`.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseVector> data;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r) {}

  std::size_t nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& r : data) n += r.size();
    return n;
  }
  double density() const noexcept {
    return rows == 0 || cols == 0
               ? 0.0
               : static_cast<double>(nonzeros()) / (static_cast<double>(rows) * cols);
  }
};

SparseMatrix transpose(const SparseMatrix& m);

/// a * b over GF(p).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& field);

/// Sort by index, merge duplicates, and drop zeros.
SparseVector normalize(std::vector<std::pair<std::uint32_t, Residue>> entries,
                       const PrimeField& field);

}  // namespace hodgekit
