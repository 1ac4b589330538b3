#include <doctest.h>

#include <set>

#include "core/error.hpp"
#include "core/field.hpp"
#include "core/graded.hpp"
#include "core/linalg.hpp"
#include "core/monomial.hpp"
#include "core/polynomial.hpp"
#include "core/random.hpp"
#include "core/subspace.hpp"
#include "helpers.hpp"

using namespace hodgekit;

TEST_CASE("field arithmetic") {
  PrimeField f(65521);
  CHECK(f.add(65520, 5) == 4);
  CHECK(f.sub(3, 5) == 65519);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.pow(3, 65520) == 1);
  CHECK(f.from_int(-1) == 65520);
  CHECK(f.to_signed(65520) == -1);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(65522), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_NOTHROW(PrimeField(32003));
}

TEST_CASE("monomial basis is graded lex and index is its position") {
  CHECK(dim_graded(3, 2) == 6);
  CHECK(dim_graded(5, 5) == 126);
  CHECK(dim_graded(4, -1) == 0);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 5; ++k) {
      const auto basis = monomial_basis(n, k);
      REQUIRE(basis.size() == dim_graded(n, k));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].index() == i);
        if (i) CHECK(basis[i - 1] > basis[i]);
      }
    }
  const auto b = monomial_basis(3, 2);
  CHECK(b.front() == Monomial(3, {2, 0, 0}));
  CHECK(b.back() == Monomial(3, {0, 0, 2}));
}

TEST_CASE("product_index agrees with the product") {
  const auto a = monomial_basis(4, 2);
  const auto b = monomial_basis(4, 3);
  for (const auto& x : a)
    for (const auto& y : b) CHECK(product_index(x, y) == (x * y).index());
  const Monomial m(3, {1, 2, 0});
  CHECK(m.divides(Monomial(3, {2, 2, 1})));
  CHECK(m.quotient_of(Monomial(3, {2, 2, 1})) == Monomial(3, {1, 0, 1}));
  CHECK_FALSE(m.divides(Monomial(3, {0, 3, 3})));
}

TEST_CASE("polynomial parsing and printing round trip") {
  PrimeField f(65521);
  const auto p = parse_polynomial("x0^3 + 2*x1^3 - x0*x1*x2 + x2^3", 3, f);
  CHECK(p.degree() == 3);
  CHECK(p.coefficient(Monomial(3, {1, 1, 1})) == 65520);
  CHECK(parse_polynomial(p.to_string(), 3, f) == p);
  CHECK(parse_polynomial(" x0 * x1 ", 2, f) == Polynomial::term(f, Monomial(2, {1, 1})));
  CHECK(parse_polynomial("x0^2 - x0^2", 2, f).is_zero());
  CHECK_FALSE(parse_polynomial("x0^2 + x1", 2, f).degree().has_value());

  for (const char* bad : {"x3", "x0^", "2**x0", "x0 +", "y0", "x0^300", ""}) {
    CAPTURE(bad);
    try {
      parse_polynomial(bad, 3, f);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Parse);
    }
  }
}

TEST_CASE("derivative and products") {
  PrimeField f(65521);
  const auto p = parse_polynomial("x0^3*x1 + 5*x1^4", 2, f);
  CHECK(p.derivative(0) == parse_polynomial("3*x0^2*x1", 2, f));
  CHECK(p.derivative(1) == parse_polynomial("x0^3 + 20*x1^3", 2, f));
  const auto a = parse_polynomial("x0 + x1", 2, f);
  const auto b = parse_polynomial("x0 - x1", 2, f);
  CHECK(a * b == parse_polynomial("x0^2 - x1^2", 2, f));
  CHECK_THROWS_AS(a * parse_polynomial("x0", 2, PrimeField(32003)), Error);
}

TEST_CASE("graded product matches polynomial multiplication") {
  PrimeField f(32003);
  Rng rng(5);
  GradedProduct mult(3, 2, 3, f);
  const auto x = random_vector(dim_graded(3, 2), rng, f);
  const auto y = random_vector(dim_graded(3, 3), rng, f);
  const auto px = Polynomial::from_vector(x, 3, 2, f);
  const auto py = Polynomial::from_vector(y, 3, 3, f);
  CHECK(mult(x, y) == (px * py).to_vector(5));
}

TEST_CASE("sparse rank agrees with naive elimination") {
  ComputeContext ctx(65521);
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng.below(12), cols = 1 + rng.below(12);
    SparseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng.below(3) == 0) m.data[i].push(static_cast<std::uint32_t>(j), rng.residue(ctx.field));
    // low-rank rows: repeat combinations
    if (rows > 2) m.data[rows - 1] = m.data[0];
    const auto want = testing::naive_rank(testing::to_dense(m), 65521);
    CHECK(rank_profile(m, ctx).rank == want);
    CHECK(rank_of_vectors(m.data, cols, ctx) == want);
    CHECK(rank_of_vectors(transpose(m).data, rows, ctx) == want);
  }
}

TEST_CASE("kernel basis vectors are annihilated") {
  ComputeContext ctx(32003);
  Rng rng(3);
  std::vector<SparseVector> images;
  for (int j = 0; j < 7; ++j) images.push_back(random_vector(4, rng, ctx.field));
  const auto ker = kernel_basis(images, 4, ctx);
  CHECK(ker.size() == 3);
  for (const auto& k : ker) {
    std::vector<std::uint64_t> sum(4, 0);
    for (std::size_t t = 0; t < k.size(); ++t)
      for (std::size_t u = 0; u < images[k.idx[t]].size(); ++u)
        sum[images[k.idx[t]].idx[u]] =
            (sum[images[k.idx[t]].idx[u]] + std::uint64_t{k.val[t]} * images[k.idx[t]].val[u]) %
            32003;
    for (auto s : sum) CHECK(s == 0);
  }
}

TEST_CASE("echelon budget is enforced") {
  PrimeField f(65521);
  RowEchelon ech(f, 10, 5);
  SparseVector v;
  for (std::uint32_t j = 0; j < 10; ++j) v.push(j, 1);
  try {
    ech.insert(v);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeBudget);
  }
}

TEST_CASE("subspace sums and intersections satisfy the dimension formula") {
  ComputeContext ctx(65521);
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_subspace(3, 2, rng.below(6), rng, ctx);
    const auto b = random_subspace(3, 2, rng.below(6), rng, ctx);
    const auto s = subspace_sum(a, b, ctx);
    const auto i = subspace_intersection(a, b, ctx);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    CHECK(s.contains(a));
    CHECK(s.contains(b));
  }
}

TEST_CASE("normal form and quotient coordinates") {
  ComputeContext ctx(65521);
  Rng rng(8);
  const auto w = random_subspace(3, 3, 4, rng, ctx);
  CHECK(w.codim() == 4);
  CHECK(w.free_columns().size() == 4);
  for (const auto& b : w.basis()) CHECK(w.contains(b));
  const auto v = random_vector(w.ambient_dim(), rng, ctx.field);
  const auto nf = w.normal_form(v);
  std::set<std::uint32_t> free(w.free_columns().begin(), w.free_columns().end());
  for (auto j : nf.idx) CHECK(free.count(j) == 1);
  CHECK(w.quotient_coordinates(v).size() == nf.size());
  const auto bigger = random_subspace_containing(w, 1, rng, ctx);
  CHECK(bigger.codim() == 1);
  CHECK(bigger.contains(w));
}

TEST_CASE("seeded generators are reproducible") {
  Rng a(42), b(42), c(derive_seed(42, 1));
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  CHECK(c.next() != Rng(42).next());
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
  for (int i = 0; i < 1000; ++i) CHECK(a.below(7) < 7);
}
