#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "core/context.hpp"
#include "core/polynomial.hpp"
#include "core/random.hpp"
#include "core/subspace.hpp"

namespace hodgekit {

/// X_f ⊂ P^{d+1}: a form f of degree N in n = d+2 variables.
class Hypersurface {
 public:
  explicit Hypersurface(Polynomial f);

  const Polynomial& polynomial() const noexcept { return f_; }
  int nvars() const noexcept { return f_.nvars(); }
  int dimension() const noexcept { return f_.nvars() - 2; }
  int degree() const noexcept { return degree_; }

 private:
  Polynomial f_;
  int degree_;
};

struct SmoothnessCertificate {
  bool smooth = false;
  /// Empty when smooth.
  std::string reason;
};

/// R_f = S / J_f with per-degree caches of J_f^k.
///
/// Each J_f^k is built on first request under a lock and never changes
/// afterwards, so a ring can be shared across threads.
class JacobianRing {
 public:
  /// Rejects p | N and p | N-1 (for N >= 2).
  JacobianRing(Hypersurface x, const ComputeContext& ctx);

  const Hypersurface& hypersurface() const noexcept { return x_; }
  const ComputeContext& context() const noexcept { return ctx_; }
  int nvars() const noexcept { return x_.nvars(); }
  int degree() const noexcept { return x_.degree(); }
  int dimension() const noexcept { return x_.dimension(); }

  /// sigma = (d+2)(N-2).
  int socle_degree() const noexcept { return (dimension() + 2) * (degree() - 2); }

  /// The partial derivatives df/dx_i, i = 0..n-1.
  const std::vector<Polynomial>& generators() const noexcept { return partials_; }

  /// J_f^k: span of m * df/dx_i with deg m = k - (N-1); zero for k < N-1.
  std::shared_ptr<const GradedSubspace> jacobian_piece(int k) const;

  /// dim R_f^k = dim S^k - dim J_f^k (0 for k < 0).
  std::uint64_t hilbert(int k) const;

  /// Smooth iff dim R^sigma = 1 and dim R^{sigma+1} = 0.
  const SmoothnessCertificate& smoothness() const;
  bool is_smooth() const { return smoothness().smooth; }

 private:
  Hypersurface x_;
  ComputeContext ctx_;
  std::vector<Polynomial> partials_;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<const GradedSubspace>> pieces_;
  mutable std::optional<SmoothnessCertificate> smooth_;
};

/// Fermat form plus a random sparse perturbation, redrawn until the
/// smoothness certificate passes. Throws Sampling after `max_attempts`.
Polynomial random_smooth_form(int d, int N, Rng& rng, const ComputeContext& ctx,
                              int max_attempts = 32);

}  // namespace hodgekit
