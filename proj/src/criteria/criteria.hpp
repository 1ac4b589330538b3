#pragma once

#include <cstdint>
#include <vector>

namespace hodgekit {

/// Parameters of the sweeping-out criterion: fibre dimension d, degree N,
/// dimension r of the sweeping varieties and moduli dimension C.
struct CriterionInput {
  int d = 1;
  int N = 1;
  int r = 1;
  int C = 0;
};

/// Condition at index i: -d-2+N(gamma_i+i) >= C+d-r-i.
struct PerIndexCondition {
  int i = 0;
  int gamma_i = 0;
  std::int64_t slack = 0;
};

struct CriterionReport {
  CriterionInput input;
  int gamma = 0;
  /// (N+1)r - (2d+C+2)
  std::int64_t ineq1_slack = 0;
  /// (gamma+1)N - (2d-r+1+C)
  std::int64_t ineq2_slack = 0;
  bool ineq1 = false;
  bool ineq2 = false;
  /// ineq1 && ineq2. Never read as "swept out" when false.
  bool pass = false;
  /// N >= d+2; reported separately from pass.
  bool degree_hypothesis = false;
  /// i = 1..r
  std::vector<PerIndexCondition> per_i;
};

/// Round-up of (r-1)/2.
int gamma(int r);
/// Round-up of (r-i)/2; may be zero or negative for i >= r.
int gamma_i(int r, int i);

/// Throws InvalidArgument unless d >= 1, N >= 1, 1 <= r <= d, C >= 0.
void validate(const CriterionInput& in);

CriterionReport sweep_criterion(const CriterionInput& in);

/// r(r+1)/2
int abelian_moduli_dimension(int r);
/// Rows r = 1..d with N = d+2 and C = r(r+1)/2.
std::vector<CriterionReport> abelian_sweep_table(int d);

/// 3g-3 for g >= 2, 1 for g = 1.
int genus_moduli_dimension(int g);
/// Least N for which sweep_criterion(d, N, r=1, C=genus_moduli_dimension(g))
/// passes, found by scanning N upward.
int genus_threshold(int d, int g);
/// 2d-2+3g for g >= 2, 2d+2 for g = 1.
int genus_threshold_closed_form(int d, int g);

/// True iff gamma_i + i is non-decreasing and C+d-r-i strictly decreasing
/// on i = 1..r, and the condition at i = 1 implies it at every i <= r.
bool per_i_monotonicity(const CriterionInput& in);

}  // namespace hodgekit
