#include "core/sparse.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace hodgekit {

SparseMatrix transpose(const SparseMatrix& m) {
  SparseMatrix t(m.cols, m.rows);
  std::vector<std::size_t> counts(m.cols, 0);
  for (const auto& row : m.data)
    for (auto j : row.idx) ++counts[j];
  for (std::size_t j = 0; j < m.cols; ++j) {
    t.data[j].idx.reserve(counts[j]);
    t.data[j].val.reserve(counts[j]);
  }
  for (std::size_t i = 0; i < m.rows; ++i) {
    const auto& row = m.data[i];
    for (std::size_t k = 0; k < row.size(); ++k)
      t.data[row.idx[k]].push(static_cast<std::uint32_t>(i), row.val[k]);
  }
  return t;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& field) {
  require(a.cols == b.rows, ErrorCode::InvalidArgument, "matrix shapes do not compose");
  SparseMatrix c(a.rows, b.cols);
  const std::uint64_t p = field.modulus();
  std::vector<std::uint64_t> acc(b.cols, 0);
  std::vector<char> touched(b.cols, 0);
  std::vector<std::uint32_t> cols;
  for (std::size_t i = 0; i < a.rows; ++i) {
    cols.clear();
    const auto& ra = a.data[i];
    for (std::size_t k = 0; k < ra.size(); ++k) {
      const auto& rb = b.data[ra.idx[k]];
      const std::uint64_t f = ra.val[k];
      for (std::size_t t = 0; t < rb.size(); ++t) {
        const auto j = rb.idx[t];
        if (!touched[j]) {
          touched[j] = 1;
          cols.push_back(j);
        }
        acc[j] = (acc[j] + f * rb.val[t]) % p;
      }
    }
    std::sort(cols.begin(), cols.end());
    for (auto j : cols) {
      if (acc[j] != 0) c.data[i].push(j, static_cast<Residue>(acc[j]));
      acc[j] = 0;
      touched[j] = 0;
    }
  }
  return c;
}

SparseVector normalize(std::vector<std::pair<std::uint32_t, Residue>> entries,
                       const PrimeField& field) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  SparseVector v;
  v.idx.reserve(entries.size());
  v.val.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size();) {
    std::uint32_t j = entries[i].first;
    Residue s = 0;
    for (; i < entries.size() && entries[i].first == j; ++i)
      s = field.add(s, entries[i].second % field.modulus());
    if (s != 0) v.push(j, s);
  }
  return v;
}

}  // namespace hodgekit
