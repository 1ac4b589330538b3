#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/context.hpp"
#include "core/random.hpp"
#include "core/subspace.hpp"
#include "jacobian/jacobian_ring.hpp"
#include "koszul/linear_system.hpp"

namespace hodgekit {

/// Rank of (a, b) -> socle coordinate of a*b on A x B, where
/// deg A + deg B = sigma. Requires a smooth-certified ring.
std::size_t socle_pairing_rank(const JacobianRing& ring, const GradedSubspace& a,
                               const GradedSubspace& b);

/// Checks N = d+2, deg K = N and J_f^N ⊆ K; throws otherwise.
void require_yukawa_input(const JacobianRing& ring, const GradedSubspace& k);

/// K^d = K * K * ... * K (d factors) in S^{d(d+2)}, reduced at each step.
GradedSubspace iterated_power(const GradedSubspace& k, int times, const ComputeContext& ctx);

/// True iff K^d is not contained in J_f^{d(d+2)}.
bool yukawa_nonvanishing(const JacobianRing& ring, const GradedSubspace& k);

struct ChainStep {
  std::string step;
  std::string expected;
  std::int64_t got = 0;
  bool ok = false;
};

struct YukawaChainReport {
  int d = 0;
  int N = 0;
  int sigma = 0;
  std::size_t codim_k = 0;
  /// K' = [K : S^1] in S^{d+1}
  std::size_t colon_codim = 0;
  BpfStatus colon_bpf;
  std::uint64_t colon_span_dim = 0;  // dim S^{d+3} K'
  std::uint64_t k2_dim = 0;
  std::uint64_t kd_dim = 0;
  std::uint64_t target_2d4 = 0;    // dim S^{2d+4}
  std::uint64_t target_sigma = 0;  // dim S^{d(d+2)}
  bool socle_image_nonzero = false;
  std::vector<ChainStep> steps;

  bool all_ok() const;
};

/// Runs every step of the hyperplane chain and records each outcome. Only
/// malformed input throws; a codimension other than 1 is a failing step.
YukawaChainReport yukawa_chain(const JacobianRing& ring, const GradedSubspace& k);

/// Uniformly random hyperplane of S^N containing J_f^N.
GradedSubspace random_jacobian_hyperplane(const JacobianRing& ring, Rng& rng);

}  // namespace hodgekit
