#include "criteria/criteria.hpp"

#include <string>

#include "core/error.hpp"

namespace hodgekit {

namespace {

// ceil(x / 2) for any sign
int ceil_half(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

std::int64_t per_index_slack(const CriterionInput& in, int i) {
  const std::int64_t lhs = -in.d - 2 + std::int64_t{in.N} * (gamma_i(in.r, i) + i);
  const std::int64_t rhs = std::int64_t{in.C} + in.d - in.r - i;
  return lhs - rhs;
}

}  // namespace

int gamma(int r) {
  require(r >= 1, ErrorCode::InvalidArgument, "r must be >= 1");
  return ceil_half(r - 1);
}

int gamma_i(int r, int i) {
  require(r >= 1 && i >= 0, ErrorCode::InvalidArgument, "need r >= 1 and i >= 0");
  return ceil_half(r - i);
}

void validate(const CriterionInput& in) {
  require(in.d >= 1, ErrorCode::InvalidArgument, "d must be >= 1");
  require(in.N >= 1, ErrorCode::InvalidArgument, "N must be >= 1");
  require(in.r >= 1 && in.r <= in.d, ErrorCode::InvalidArgument,
          "r must satisfy 1 <= r <= d (got r=" + std::to_string(in.r) +
              ", d=" + std::to_string(in.d) + ")");
  require(in.C >= 0, ErrorCode::InvalidArgument, "C must be >= 0");
}

CriterionReport sweep_criterion(const CriterionInput& in) {
  validate(in);
  CriterionReport rep;
  rep.input = in;
  rep.gamma = gamma(in.r);
  rep.ineq1_slack = std::int64_t{in.N + 1} * in.r - (2 * std::int64_t{in.d} + in.C + 2);
  rep.ineq2_slack =
      std::int64_t{rep.gamma + 1} * in.N - (2 * std::int64_t{in.d} - in.r + 1 + in.C);
  rep.ineq1 = rep.ineq1_slack >= 0;
  rep.ineq2 = rep.ineq2_slack >= 0;
  rep.pass = rep.ineq1 && rep.ineq2;
  rep.degree_hypothesis = in.N >= in.d + 2;
  for (int i = 1; i <= in.r; ++i) rep.per_i.push_back({i, gamma_i(in.r, i), per_index_slack(in, i)});
  return rep;
}

int abelian_moduli_dimension(int r) { return r * (r + 1) / 2; }

std::vector<CriterionReport> abelian_sweep_table(int d) {
  require(d >= 1, ErrorCode::InvalidArgument, "d must be >= 1");
  std::vector<CriterionReport> rows;
  for (int r = 1; r <= d; ++r) rows.push_back(sweep_criterion({d, d + 2, r, abelian_moduli_dimension(r)}));
  return rows;
}

int genus_moduli_dimension(int g) {
  require(g >= 1, ErrorCode::InvalidArgument, "genus must be >= 1");
  return g == 1 ? 1 : 3 * g - 3;
}

int genus_threshold(int d, int g) {
  require(d >= 1, ErrorCode::InvalidArgument, "d must be >= 1");
  const int C = genus_moduli_dimension(g);
  // with r = 1 both inequalities hold once N >= 2d + C + 1
  const int limit = 2 * d + C + 2;
  for (int N = 1; N <= limit; ++N)
    if (sweep_criterion({d, N, 1, C}).pass) return N;
  fail(ErrorCode::InvalidArgument, "no threshold found up to N = " + std::to_string(limit));
}

int genus_threshold_closed_form(int d, int g) {
  require(g >= 1, ErrorCode::InvalidArgument, "genus must be >= 1");
  return g == 1 ? 2 * d + 2 : 2 * d - 2 + 3 * g;
}

bool per_i_monotonicity(const CriterionInput& in) {
  validate(in);
  bool ok = true;
  for (int i = 2; i <= in.r; ++i) {
    ok = ok && gamma_i(in.r, i) + i >= gamma_i(in.r, i - 1) + i - 1;
    ok = ok && (in.C + in.d - in.r - i) < (in.C + in.d - in.r - (i - 1));
  }
  if (per_index_slack(in, 1) >= 0)
    for (int i = 1; i <= in.r; ++i) ok = ok && per_index_slack(in, i) >= 0;
  return ok;
}

}  // namespace hodgekit
