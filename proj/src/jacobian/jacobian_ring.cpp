#include "jacobian/jacobian_ring.hpp"

#include "core/error.hpp"
#include "core/graded.hpp"
#include "core/linalg.hpp"

namespace hodgekit {

Hypersurface::Hypersurface(Polynomial f) : f_(std::move(f)), degree_(0) {
  require(f_.nvars() >= 2, ErrorCode::InvalidArgument,
          "a hypersurface needs n = d+2 >= 2 variables");
  const auto deg = f_.degree();
  require(deg.has_value(), ErrorCode::InvalidArgument,
          "hypersurface equation must be a nonzero homogeneous form");
  require(*deg >= 1, ErrorCode::InvalidArgument, "hypersurface degree must be >= 1");
  degree_ = *deg;
}

JacobianRing::JacobianRing(Hypersurface x, const ComputeContext& ctx)
    : x_(std::move(x)), ctx_(ctx) {
  require(x_.polynomial().field() == ctx.field, ErrorCode::ModulusMismatch,
          "form and context use different primes");
  const std::uint32_t p = ctx.field.modulus();
  const int N = x_.degree();
  require(N % p != 0, ErrorCode::InvalidArgument,
          "prime " + std::to_string(p) + " divides the degree " + std::to_string(N));
  require(N < 2 || (N - 1) % p != 0, ErrorCode::InvalidArgument,
          "prime " + std::to_string(p) + " divides N-1 = " + std::to_string(N - 1));
  for (int i = 0; i < x_.nvars(); ++i) partials_.push_back(x_.polynomial().derivative(i));
}

std::shared_ptr<const GradedSubspace> JacobianRing::jacobian_piece(int k) const {
  require(k >= 0, ErrorCode::InvalidArgument, "degree must be >= 0");
  std::lock_guard lock(mu_);
  if (auto it = pieces_.find(k); it != pieces_.end()) return it->second;

  const int n = nvars();
  const int shift = k - (degree() - 1);
  std::shared_ptr<const GradedSubspace> piece;
  if (shift < 0) {
    piece = std::make_shared<const GradedSubspace>(n, k, ctx_.field);
  } else {
    std::vector<SparseVector> partial_vecs;
    std::size_t partial_terms = 0;
    for (const auto& g : partials_) {
      if (g.is_zero()) continue;
      partial_vecs.push_back(g.to_vector(degree() - 1));
      partial_terms += g.terms().size();
    }
    const std::uint64_t multipliers = dim_graded(n, shift);
    check_budget(multipliers * partial_terms, ctx_.limits, "Jacobian piece");
    const GradedProduct mul(n, shift, degree() - 1, ctx_.field);
    const std::size_t ambient = dim_graded(n, k);
    RowEchelon ech(ctx_.field, ambient, ctx_.limits.cell_budget);
    SparseVector m;
    for (std::uint64_t j = 0; j < multipliers && !ech.full(); ++j) {
      m.idx.assign(1, static_cast<std::uint32_t>(j));
      m.val.assign(1, 1);
      for (const auto& g : partial_vecs) {
        if (ech.full()) break;
        ech.insert(mul(m, g));
      }
    }
    piece = std::make_shared<const GradedSubspace>(
        ech.full() ? GradedSubspace::full(n, k, ctx_.field)
                   : GradedSubspace::from_echelon(n, k, ech));
  }
  pieces_.emplace(k, piece);
  return piece;
}

std::uint64_t JacobianRing::hilbert(int k) const {
  if (k < 0) return 0;
  {
    std::lock_guard lock(mu_);
    // J contains S^{sigma+1} once certified, hence every higher degree
    if (smooth_ && smooth_->smooth && k > socle_degree() + 1) return 0;
  }
  return jacobian_piece(k)->codim();
}

const SmoothnessCertificate& JacobianRing::smoothness() const {
  {
    std::lock_guard lock(mu_);
    if (smooth_) return *smooth_;
  }
  SmoothnessCertificate cert;
  const int sigma = socle_degree();
  if (sigma < 0) {
    cert.reason = "degree 1: the Jacobian ring is zero and has no socle";
  } else {
    const auto top = hilbert(sigma);
    const auto above = hilbert(sigma + 1);
    if (top != 1)
      cert.reason = "dim R^" + std::to_string(sigma) + " = " + std::to_string(top) + ", expected 1";
    else if (above != 0)
      cert.reason = "dim R^" + std::to_string(sigma + 1) + " = " + std::to_string(above) +
                    ", expected 0";
    else
      cert.smooth = true;
  }
  std::lock_guard lock(mu_);
  if (!smooth_) smooth_ = std::move(cert);
  return *smooth_;
}

Polynomial random_smooth_form(int d, int N, Rng& rng, const ComputeContext& ctx,
                              int max_attempts) {
  require(d >= 0 && N >= 2, ErrorCode::InvalidArgument, "random smooth forms need d >= 0, N >= 2");
  const int n = d + 2;
  const auto mons = monomial_basis(n, N);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Polynomial f = Polynomial::fermat(n, N, ctx.field);
    for (int t = 0; t < n + 1; ++t)
      f.add_term(mons[rng.below(mons.size())], rng.nonzero_residue(ctx.field));
    if (!f.degree()) continue;
    JacobianRing ring(Hypersurface(f), ctx);
    if (ring.is_smooth()) return f;
  }
  fail(ErrorCode::Sampling, "no smooth form found after " + std::to_string(max_attempts) +
                                " attempts");
}

}  // namespace hodgekit
