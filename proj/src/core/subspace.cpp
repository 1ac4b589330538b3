#include "core/subspace.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace hodgekit {

GradedSubspace::GradedSubspace(int nvars, int degree, PrimeField field)
    : n_(nvars), k_(degree), field_(field), ambient_(dim_graded(nvars, degree)) {
  require(degree >= 0, ErrorCode::InvalidArgument, "subspace degree must be >= 0");
  index_rows();
}

GradedSubspace GradedSubspace::full(int nvars, int degree, PrimeField field) {
  GradedSubspace s(nvars, degree, field);
  s.basis_.resize(s.ambient_);
  for (std::size_t i = 0; i < s.ambient_; ++i) s.basis_[i].push(static_cast<std::uint32_t>(i), 1);
  s.index_rows();
  return s;
}

GradedSubspace GradedSubspace::span(int nvars, int degree,
                                    const std::vector<SparseVector>& generators,
                                    const ComputeContext& ctx) {
  GradedSubspace s(nvars, degree, ctx.field);
  RowEchelon ech(ctx.field, s.ambient_, ctx.limits.cell_budget);
  for (const auto& g : generators) {
    s.check_vector(g);
    if (ech.full()) break;
    ech.insert(g);
  }
  s.basis_ = ech.reduced_rows();
  s.index_rows();
  return s;
}

GradedSubspace GradedSubspace::from_echelon(int nvars, int degree, const RowEchelon& echelon) {
  GradedSubspace s(nvars, degree, echelon.field());
  require(echelon.cols() == s.ambient_, ErrorCode::InvalidArgument,
          "echelon width does not match dim S^" + std::to_string(degree));
  s.basis_ = echelon.reduced_rows();
  s.index_rows();
  return s;
}

GradedSubspace GradedSubspace::span(const std::vector<Polynomial>& generators, int nvars,
                                    int degree, const ComputeContext& ctx) {
  std::vector<SparseVector> vecs;
  vecs.reserve(generators.size());
  for (const auto& g : generators) {
    require(g.nvars() == nvars, ErrorCode::InvalidArgument, "generator in wrong ring");
    require(g.field() == ctx.field, ErrorCode::ModulusMismatch, "generator over wrong field");
    vecs.push_back(g.to_vector(degree));
  }
  return span(nvars, degree, vecs, ctx);
}

void GradedSubspace::index_rows() {
  row_of_col_.assign(ambient_, -1);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    row_of_col_[basis_[r].idx[0]] = static_cast<std::int32_t>(r);
  free_.clear();
  free_.reserve(ambient_ - basis_.size());
  for (std::size_t c = 0; c < ambient_; ++c)
    if (row_of_col_[c] < 0) free_.push_back(static_cast<std::uint32_t>(c));
}

void GradedSubspace::check_vector(const SparseVector& v) const {
  require(v.empty() || v.idx.back() < ambient_, ErrorCode::InvalidArgument,
          "vector lies outside S^" + std::to_string(k_));
}

std::vector<std::uint32_t> GradedSubspace::pivots() const {
  std::vector<std::uint32_t> out;
  out.reserve(basis_.size());
  for (const auto& r : basis_) out.push_back(r.idx[0]);
  return out;
}

SparseVector GradedSubspace::normal_form(const SparseVector& v) const {
  check_vector(v);
  std::vector<std::pair<std::uint32_t, Residue>> acc;
  acc.reserve(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) {
    const auto c = v.idx[t];
    const auto r = row_of_col_[c];
    if (r < 0) {
      acc.emplace_back(c, v.val[t]);
      continue;
    }
    const auto& row = basis_[r];
    const Residue f = field_.neg(v.val[t]);
    for (std::size_t s = 1; s < row.size(); ++s)
      acc.emplace_back(row.idx[s], field_.mul(f, row.val[s]));
  }
  return normalize(std::move(acc), field_);
}

SparseVector GradedSubspace::quotient_coordinates(const SparseVector& v) const {
  SparseVector nf = normal_form(v);
  for (auto& c : nf.idx) {
    auto it = std::lower_bound(free_.begin(), free_.end(), c);
    c = static_cast<std::uint32_t>(it - free_.begin());
  }
  return nf;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  require_same_ambient(*this, other);
  if (other.dim() > dim()) return false;
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::vector<Polynomial> GradedSubspace::basis_polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(basis_.size());
  const auto mons = monomial_basis(n_, k_);
  for (const auto& row : basis_) {
    Polynomial p(n_, field_);
    for (std::size_t t = 0; t < row.size(); ++t) p.add_term(mons[row.idx[t]], row.val[t]);
    out.push_back(std::move(p));
  }
  return out;
}

void require_same_ambient(const GradedSubspace& a, const GradedSubspace& b) {
  require(a.field() == b.field(), ErrorCode::ModulusMismatch, "subspaces over different fields");
  require(a.nvars() == b.nvars() && a.degree() == b.degree(), ErrorCode::InvalidArgument,
          "ambient mismatch: S^" + std::to_string(a.degree()) + " vs S^" +
              std::to_string(b.degree()));
}

GradedSubspace subspace_sum(const GradedSubspace& a, const GradedSubspace& b,
                            const ComputeContext& ctx) {
  require_same_ambient(a, b);
  std::vector<SparseVector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return GradedSubspace::span(a.nvars(), a.degree(), gens, ctx);
}

GradedSubspace subspace_intersection(const GradedSubspace& a, const GradedSubspace& b,
                                     const ComputeContext& ctx) {
  require_same_ambient(a, b);
  const auto m = static_cast<std::uint32_t>(a.ambient_dim());
  RowEchelon ech(ctx.field, 2 * static_cast<std::size_t>(m), ctx.limits.cell_budget);
  for (const auto& v : a.basis()) {
    SparseVector w = v;
    for (std::size_t t = 0; t < v.size(); ++t) w.push(v.idx[t] + m, v.val[t]);
    ech.insert(w);
  }
  for (const auto& v : b.basis()) ech.insert(v);
  std::vector<SparseVector> gens;
  for (const auto& row : ech.reduced_rows()) {
    if (row.idx[0] < m) continue;
    SparseVector w;
    for (std::size_t t = 0; t < row.size(); ++t) w.push(row.idx[t] - m, row.val[t]);
    gens.push_back(std::move(w));
  }
  return GradedSubspace::span(a.nvars(), a.degree(), gens, ctx);
}

}  // namespace hodgekit
