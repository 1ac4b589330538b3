#include <doctest.h>

#include "core/error.hpp"
#include "criteria/criteria.hpp"

using namespace hodgekit;

TEST_CASE("gamma and gamma_i") {
  CHECK(gamma(1) == 0);
  CHECK(gamma(2) == 1);
  CHECK(gamma(5) == 2);
  for (int r = 1; r <= 20; ++r) CHECK(gamma_i(r, 1) == gamma(r));
  CHECK(gamma_i(4, 2) == 1);
  CHECK(gamma_i(3, 3) == 0);
  CHECK(gamma_i(3, 6) == -1);
  const int want[] = {3, 4, 4, 5, 5};
  for (int i = 1; i <= 5; ++i) CHECK(gamma_i(5, i) + i == want[i - 1]);
}

TEST_CASE("sweep criterion examples") {
  auto a = sweep_criterion({3, 5, 2, 3});
  CHECK(a.pass);
  CHECK(a.ineq1_slack == 12 - 11);
  CHECK(a.ineq2_slack == 10 - 8);
  CHECK(a.degree_hypothesis);

  auto b = sweep_criterion({3, 5, 1, 1});
  CHECK_FALSE(b.ineq1);
  CHECK(b.ineq1_slack == -3);
  CHECK_FALSE(b.pass);

  auto c = sweep_criterion({1, 4, 1, 0});
  CHECK(c.ineq1_slack == 1);
  CHECK(c.ineq2_slack == 2);
  CHECK(c.pass);

  auto low = sweep_criterion({5, 3, 2, 0});
  CHECK_FALSE(low.degree_hypothesis);
  CHECK(low.per_i.size() == 2);
  CHECK(low.per_i[0].i == 1);
}

TEST_CASE("input validation") {
  for (auto in : {CriterionInput{0, 3, 1, 0}, CriterionInput{3, 0, 1, 0}, CriterionInput{3, 5, 0, 0},
                  CriterionInput{3, 5, 4, 0}, CriterionInput{3, 5, 2, -1}}) {
    try {
      sweep_criterion(in);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }
}

TEST_CASE("abelian table") {
  CHECK(abelian_moduli_dimension(3) == 6);
  const auto t3 = abelian_sweep_table(3);
  REQUIRE(t3.size() == 3);
  CHECK_FALSE(t3[0].pass);
  CHECK(t3[1].pass);
  CHECK(t3[2].pass);
  const auto t2 = abelian_sweep_table(2);
  CHECK(t2[1].ineq1_slack == 10 - 9);
  CHECK(t2[1].ineq2_slack == 8 - 6);
  for (const auto& row : abelian_sweep_table(50))
    CHECK(row.pass == (row.input.r >= 2));
}

TEST_CASE("genus thresholds") {
  CHECK(genus_moduli_dimension(1) == 1);
  CHECK(genus_moduli_dimension(4) == 9);
  CHECK(genus_threshold(3, 2) == 10);
  CHECK(genus_threshold(3, 1) == 8);
  CHECK(genus_threshold(1, 3) == 9);
  for (int d = 1; d <= 10; ++d)
    for (int g = 1; g <= 6; ++g) CHECK(genus_threshold(d, g) == genus_threshold_closed_form(d, g));
}

TEST_CASE("per-i reduction") {
  CHECK(per_i_monotonicity({3, 5, 3, 6}));
  CHECK(per_i_monotonicity({1, 1, 1, 0}));
}
