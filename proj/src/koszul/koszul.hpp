#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/context.hpp"
#include "core/sparse.hpp"
#include "core/subspace.hpp"
#include "jacobian/jacobian_ring.hpp"

namespace hodgekit {

/// Graded module the linear system acts on: S itself or R_f = S/J_f.
class KoszulModule {
 public:
  static KoszulModule polynomial_ring(int nvars);
  static KoszulModule jacobian_ring(std::shared_ptr<const JacobianRing> ring);

  bool is_jacobian() const noexcept { return ring_ != nullptr; }
  int nvars() const noexcept { return n_; }
  const JacobianRing* ring() const noexcept { return ring_.get(); }
  /// "S" or "R_f"
  std::string name() const { return is_jacobian() ? "R_f" : "S"; }
  /// dim M^k
  std::uint64_t dim(int k) const;

 private:
  int n_ = 0;
  std::shared_ptr<const JacobianRing> ring_;
};

/// M^a ⊗ Λ^{s+1}W -> M^{a+N} ⊗ Λ^s W -> M^{a+2N} ⊗ Λ^{s-1}W with
///   δ(m ⊗ w_{i0} ∧ ... ∧ w_{it}) = Σ_j (-1)^j (w_{ij} m) ⊗ w_{i0} ∧ ..^.. ∧ w_{it}.
/// Exterior bases are increasing index tuples in lexicographic order; a
/// tensor basis element has index module_index * C(w, t) + tuple_rank.
/// Matrices act on column vectors (rows index the target).
struct KoszulSlice {
  std::string module;
  int a = 0;
  int s = 0;
  int N = 0;
  std::size_t w = 0;
  std::uint64_t dim_left = 0;   // dim M^a
  std::uint64_t dim_mid = 0;    // dim M^{a+N}
  std::uint64_t dim_right = 0;  // dim M^{a+2N}
  SparseMatrix delta_in;
  SparseMatrix delta_out;
};

struct KoszulReport {
  std::string module;
  int a = 0;
  int s = 0;
  std::size_t w = 0;
  std::size_t in_rows = 0, in_cols = 0;
  std::size_t out_rows = 0, out_cols = 0;
  std::size_t rank_in = 0;
  std::size_t kernel_out = 0;
  /// kernel_out - rank_in; never negative since δ∘δ = 0.
  std::size_t defect = 0;
  bool exact = false;
};

/// C(n, k), throwing ParameterTooLarge past 63 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Rank of an increasing index tuple among all size-|tuple| tuples from
/// [0, w) in lexicographic order.
std::uint64_t combination_rank(const std::vector<std::uint32_t>& tuple, std::uint64_t w);

/// Upper bound on the stored nonzeros of a slice; used for budget refusal
/// before anything is built.
std::uint64_t estimate_slice_entries(const KoszulModule& module, const GradedSubspace& w, int a,
                                     int s);

KoszulSlice koszul_slice(const KoszulModule& module, const GradedSubspace& w, int a, int s,
                         const ComputeContext& ctx);

/// True iff delta_out * delta_in = 0.
bool composes_to_zero(const KoszulSlice& slice, const ComputeContext& ctx);

KoszulReport middle_exactness(const KoszulModule& module, const GradedSubspace& w, int a, int s,
                              const ComputeContext& ctx);

/// Green's theorem scan over random base-point-free systems.
struct GreenScanParams {
  int n = 3;
  int N = 3;
  std::vector<int> codims{0};
  int a_min = 0;
  int a_max = 6;
  int s_max = 2;
  int trials = 3;
  std::uint64_t seed = 0;
  int max_sampling_attempts = 16;
};

struct GreenCell {
  int n = 0, N = 0, codim = 0, trial = 0, a = 0, s = 0;
  /// a >= s + codim: Green's theorem predicts exactness.
  bool bound_holds = false;
  /// Empty when no certified base-point-free W could be sampled.
  std::optional<KoszulReport> report;
  /// Degree at which base-point-freeness was certified.
  int bpf_degree = -1;
};

struct GreenScanResult {
  GreenScanParams params;
  std::vector<GreenCell> cells;
  std::size_t in_bound_defects = 0;
  std::size_t sampling_failures = 0;
};

/// Throws SizeBudget if any cell of the grid would exceed the budget.
void check_green_scan_budget(const GreenScanParams& params, const ComputeContext& ctx);

GreenScanResult green_scan(const GreenScanParams& params, const ComputeContext& ctx);

/// Koszul exactness for R_f with left degree a = -d-2+Np.
struct JacobianKoszulReport {
  KoszulReport report;
  int p = 0;
  std::size_t codim_w = 0;
  /// a >= s + codim W
  bool green_bound = false;
  /// -d-2+N(p+1) >= N-1, the range where the S-statement transfers to R_f
  bool transfer_bound = false;
};

/// Requires a smooth ring and W ⊇ J_f^N (NotContained otherwise).
JacobianKoszulReport jacobian_koszul_check(std::shared_ptr<const JacobianRing> ring,
                                           const GradedSubspace& w, int p, int s,
                                           const ComputeContext& ctx);

}  // namespace hodgekit
