#pragma once

#include <cstdint>
#include <vector>

#include "core/field.hpp"
#include "core/sparse.hpp"

namespace testing {

// Textbook Gaussian elimination on a dense copy; shares nothing with the
// library's elimination code.
inline std::size_t naive_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto mod = [p](std::int64_t x) { return ((x % p) + p) % p; };
  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, b = mod(a), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && mod(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::int64_t iv = inv(m[rank][c]);
    for (auto& x : m[rank]) x = mod(x) * iv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const std::int64_t f = mod(m[i][c]);
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[rank][j]);
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<std::int64_t>> to_dense(const std::vector<hodgekit::SparseVector>& rows,
                                                       std::size_t cols) {
  std::vector<std::vector<std::int64_t>> out(rows.size(), std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k) out[i][rows[i].idx[k]] = rows[i].val[k];
  return out;
}

inline std::vector<std::vector<std::int64_t>> to_dense(const hodgekit::SparseMatrix& m) {
  return to_dense(m.data, m.cols);
}

}  // namespace testing
