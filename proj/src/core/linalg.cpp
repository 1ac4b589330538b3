#include "core/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include "core/error.hpp"

namespace hodgekit {

namespace {

// Per-thread scatter buffers; entries are restored to zero after each use.
struct Scratch {
  std::vector<std::uint64_t> acc;
  std::vector<char> queued;
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap;

  void ensure(std::size_t n) {
    if (acc.size() < n) {
      acc.resize(n, 0);
      queued.resize(n, 0);
    }
  }
};

// Accumulators stay below p^2 (< 2^62), so a sum of two never overflows and
// only popped entries need a division.
inline void accumulate(std::uint64_t& acc, std::uint64_t x, std::uint64_t pp) {
  acc += x;
  if (acc >= pp) acc -= pp;
}

Scratch& scratch(std::size_t n) {
  thread_local Scratch s;
  s.ensure(n);
  return s;
}

}  // namespace

void check_budget(std::uint64_t cells, const Limits& limits, const char* what) {
  if (cells > limits.cell_budget)
    fail(ErrorCode::SizeBudget, std::string(what) + " needs " + std::to_string(cells) +
                                    " entries, budget is " +
                                    std::to_string(limits.cell_budget));
}

RowEchelon::RowEchelon(PrimeField field, std::size_t ncols, std::uint64_t entry_budget)
    : field_(field), ncols_(ncols), budget_(entry_budget), pivot_row_(ncols, -1) {}

SparseVector RowEchelon::remainder(const SparseVector& v) const {
  const std::uint64_t p = field_.modulus();
  const std::uint64_t pp = p * p;
  auto& s = scratch(ncols_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto j = v.idx[k];
    s.acc[j] = v.val[k];
    s.queued[j] = 1;
    s.heap.push(j);
  }
  SparseVector out;
  while (!s.heap.empty()) {
    const auto c = s.heap.top();
    s.heap.pop();
    s.queued[c] = 0;
    const std::uint64_t x = s.acc[c] % p;
    s.acc[c] = 0;
    if (x == 0) continue;
    const auto r = pivot_row_[c];
    if (r < 0) {
      out.push(c, static_cast<Residue>(x));
      continue;
    }
    const auto& row = rows_[r];
    const std::uint64_t f = p - x;
    for (std::size_t t = 1; t < row.size(); ++t) {
      const auto j = row.idx[t];
      if (!s.queued[j]) {
        s.queued[j] = 1;
        s.heap.push(j);
      }
      accumulate(s.acc[j], f * row.val[t], pp);
    }
  }
  return out;
}

bool RowEchelon::insert(const SparseVector& v) {
  if (rows_.size() == ncols_) return false;
  const std::uint64_t p = field_.modulus();
  const std::uint64_t pp = p * p;
  auto& s = scratch(ncols_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    const auto j = v.idx[k];
    s.acc[j] = v.val[k];
    s.queued[j] = 1;
    s.heap.push(j);
  }
  SparseVector out;
  while (!s.heap.empty()) {
    const auto c = s.heap.top();
    s.heap.pop();
    s.queued[c] = 0;
    const std::uint64_t x = s.acc[c] % p;
    s.acc[c] = 0;
    if (x == 0) continue;
    const auto r = pivot_row_[c];
    if (r < 0 || !out.empty()) {
      // first free column leads; everything after it is kept unreduced
      out.push(c, static_cast<Residue>(x));
      continue;
    }
    const auto& row = rows_[r];
    const std::uint64_t f = p - x;
    for (std::size_t t = 1; t < row.size(); ++t) {
      const auto j = row.idx[t];
      if (!s.queued[j]) {
        s.queued[j] = 1;
        s.heap.push(j);
      }
      accumulate(s.acc[j], f * row.val[t], pp);
    }
  }
  if (out.empty()) return false;
  const Residue inv = field_.inv(out.val[0]);
  for (auto& x : out.val) x = field_.mul(x, inv);
  stored_ += out.size();
  if (stored_ > budget_)
    fail(ErrorCode::SizeBudget, "elimination fill exceeded budget of " +
                                    std::to_string(budget_) + " entries");
  pivot_row_[out.idx[0]] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(out));
  return true;
}

std::vector<SparseVector> RowEchelon::reduced_rows() const {
  const std::uint64_t p = field_.modulus();
  const std::uint64_t pp = p * p;
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return rows_[a].idx[0] > rows_[b].idx[0]; });
  std::vector<SparseVector> reduced(rows_.size());
  auto& s = scratch(ncols_);
  for (const auto r : order) {
    const auto& row = rows_[r];
    for (std::size_t k = 1; k < row.size(); ++k) {
      const auto j = row.idx[k];
      s.acc[j] = row.val[k];
      s.queued[j] = 1;
      s.heap.push(j);
    }
    SparseVector out;
    out.push(row.idx[0], 1);
    while (!s.heap.empty()) {
      const auto c = s.heap.top();
      s.heap.pop();
      s.queued[c] = 0;
      const std::uint64_t x = s.acc[c] % p;
      s.acc[c] = 0;
      if (x == 0) continue;
      const auto q = pivot_row_[c];
      if (q < 0) {
        out.push(c, static_cast<Residue>(x));
        continue;
      }
      // reduced[q] is final: its tail holds free columns only
      const auto& other = reduced[q];
      const std::uint64_t f = p - x;
      for (std::size_t t = 1; t < other.size(); ++t) {
        const auto j = other.idx[t];
        if (!s.queued[j]) {
          s.queued[j] = 1;
          s.heap.push(j);
        }
        accumulate(s.acc[j], f * other.val[t], pp);
      }
    }
    reduced[r] = std::move(out);
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const SparseVector& a, const SparseVector& b) { return a.idx[0] < b.idx[0]; });
  return reduced;
}

std::size_t dense_rank(std::vector<Residue> cells, std::size_t rows, std::size_t cols,
                       const PrimeField& field) {
  const std::uint64_t p = field.modulus();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && cells[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(cells.begin() + piv * cols, cells.begin() + (piv + 1) * cols,
                       cells.begin() + rank * cols);
    Residue* prow = &cells[rank * cols];
    const Residue inv = field.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], inv);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      Residue* row = &cells[i * cols];
      if (row[c] == 0) continue;
      const std::uint64_t f = p - row[c];
      for (std::size_t j = c; j < cols; ++j)
        row[j] = static_cast<Residue>((row[j] + f * prow[j]) % p);
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_of_vectors(const std::vector<SparseVector>& vectors, std::size_t length,
                            const ComputeContext& ctx, std::size_t cap) {
  RowEchelon ech(ctx.field, length, ctx.limits.cell_budget);
  cap = std::min(cap, length);
  for (const auto& v : vectors) {
    if (ech.rank() >= cap) break;
    ech.insert(v);
  }
  return ech.rank();
}

RankProfile rank_profile(const SparseMatrix& m, const ComputeContext& ctx) {
  RankProfile prof{0, m.cols, m.rows, m.cols};
  if (m.rows == 0 || m.cols == 0) return prof;
  const std::uint64_t cells = static_cast<std::uint64_t>(m.rows) * m.cols;
  if (m.density() > ctx.limits.dense_threshold && cells <= ctx.limits.cell_budget) {
    std::vector<Residue> dense(cells, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t k = 0; k < m.data[i].size(); ++k)
        dense[i * m.cols + m.data[i].idx[k]] = m.data[i].val[k];
    prof.rank = dense_rank(std::move(dense), m.rows, m.cols, ctx.field);
  } else {
    check_budget(m.nonzeros(), ctx.limits, "sparse matrix");
    // shorter vectors keep the echelon small
    if (m.cols <= m.rows)
      prof.rank = rank_of_vectors(m.data, m.cols, ctx);
    else
      prof.rank = rank_of_vectors(transpose(m).data, m.rows, ctx);
  }
  prof.kernel_dim = m.cols - prof.rank;
  return prof;
}

std::vector<SparseVector> kernel_basis(const std::vector<SparseVector>& images,
                                       std::size_t target_dim, const ComputeContext& ctx) {
  const std::size_t src = images.size();
  RowEchelon ech(ctx.field, target_dim + src, ctx.limits.cell_budget);
  for (std::size_t j = 0; j < src; ++j) {
    SparseVector aug = images[j];
    aug.push(static_cast<std::uint32_t>(target_dim + j), 1);
    ech.insert(aug);
  }
  std::vector<SparseVector> out;
  for (const auto& row : ech.reduced_rows()) {
    if (row.idx[0] < target_dim) continue;
    SparseVector k;
    for (std::size_t t = 0; t < row.size(); ++t)
      k.push(static_cast<std::uint32_t>(row.idx[t] - target_dim), row.val[t]);
    out.push_back(std::move(k));
  }
  return out;
}

}  // namespace hodgekit
