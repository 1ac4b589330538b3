#include "koszul/linear_system.hpp"

#include "core/error.hpp"
#include "core/graded.hpp"
#include "core/linalg.hpp"

namespace hodgekit {

GradedSubspace product_span(const GradedSubspace& a, const GradedSubspace& b,
                            const ComputeContext& ctx) {
  require(a.nvars() == b.nvars(), ErrorCode::InvalidArgument, "factors in different rings");
  require(a.field() == ctx.field && b.field() == ctx.field, ErrorCode::ModulusMismatch,
          "factors over a different field");
  const int n = a.nvars();
  const int deg = a.degree() + b.degree();
  GradedSubspace out(n, deg, ctx.field);
  if (a.dim() == 0 || b.dim() == 0) return out;

  const GradedProduct mul(n, a.degree(), b.degree(), ctx.field);
  RowEchelon ech(ctx.field, out.ambient_dim(), ctx.limits.cell_budget);
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) {
      if (ech.full()) break;
      ech.insert(mul(x, y));
    }
    if (ech.full()) break;
  }
  if (ech.full()) return GradedSubspace::full(n, deg, ctx.field);
  return GradedSubspace::from_echelon(n, deg, ech);
}

GradedSubspace colon_by_linear_forms(const GradedSubspace& k, const ComputeContext& ctx) {
  require(k.degree() >= 1, ErrorCode::InvalidArgument, "colon needs degree >= 1");
  const int n = k.nvars();
  const int m = k.degree();
  if (k.is_full()) return GradedSubspace::full(n, m - 1, ctx.field);

  const auto src = monomial_basis(n, m - 1);
  const std::size_t q = k.codim();
  // g -> (x_0 g mod K, ..., x_{n-1} g mod K) in (S^m / K)^n
  std::vector<Monomial> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Monomial::variable(n, i));
  std::vector<SparseVector> images;
  images.reserve(src.size());
  for (const auto& u : src) {
    SparseVector img;
    for (int i = 0; i < n; ++i) {
      SparseVector xu;
      xu.push(static_cast<std::uint32_t>(product_index(vars[i], u)), 1);
      const SparseVector c = k.quotient_coordinates(xu);
      for (std::size_t t = 0; t < c.size(); ++t)
        img.push(static_cast<std::uint32_t>(i * q + c.idx[t]), c.val[t]);
    }
    images.push_back(std::move(img));
  }
  return GradedSubspace::span(n, m - 1, kernel_basis(images, q * n, ctx), ctx);
}

BpfStatus bpf_check(const GradedSubspace& w, int m_max, const ComputeContext& ctx) {
  const int N = w.degree();
  require(m_max >= N, ErrorCode::InvalidArgument, "m_max must be >= deg W");
  BpfStatus status;
  if (w.dim() == 0) return status;
  for (int m = N; m <= m_max; ++m) {
    const auto full = GradedSubspace::full(w.nvars(), m - N, ctx.field);
    if (product_span(full, w, ctx).is_full()) {
      status.verified_degree = m;
      break;
    }
  }
  return status;
}

int default_bpf_bound(int nvars, int degree) noexcept { return nvars * (degree - 1) + 1; }

}  // namespace hodgekit
