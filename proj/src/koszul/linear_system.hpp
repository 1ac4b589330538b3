#pragma once

#include <optional>

#include "core/context.hpp"
#include "core/subspace.hpp"

namespace hodgekit {

/// Span of all products a*b, a in A, b in B, inside S^{deg A + deg B}.
GradedSubspace product_span(const GradedSubspace& a, const GradedSubspace& b,
                            const ComputeContext& ctx);

/// [K : S^1] = { g in S^{m-1} : x_i g in K for every i }.
GradedSubspace colon_by_linear_forms(const GradedSubspace& k, const ComputeContext& ctx);

/// Outcome of the base-point-freeness semi-decision.
struct BpfStatus {
  /// Least m with S^{m-N} W = S^m, when one was found.
  std::optional<int> verified_degree;

  bool verified() const noexcept { return verified_degree.has_value(); }
};

/// Searches m = N..m_max for S^{m-N} W = S^m. Success proves (W) contains
/// every form of degree m, hence W has no base point; failure is inconclusive.
BpfStatus bpf_check(const GradedSubspace& w, int m_max, const ComputeContext& ctx);

/// Degree bound used when certifying random systems: a base-point-free W in
/// n variables contains a regular sequence of length n, so S^m ⊆ (W) for
/// m = n(N-1)+1.
int default_bpf_bound(int nvars, int degree) noexcept;

}  // namespace hodgekit
