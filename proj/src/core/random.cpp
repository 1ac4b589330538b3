#include "core/random.hpp"

#include "core/error.hpp"
#include "core/linalg.hpp"

namespace hodgekit {

namespace {
constexpr int kMaxAttempts = 64;
}

SparseVector random_vector(std::size_t dim, Rng& rng, const PrimeField& field) {
  SparseVector v;
  for (std::size_t i = 0; i < dim; ++i) {
    const Residue x = rng.residue(field);
    if (x != 0) v.push(static_cast<std::uint32_t>(i), x);
  }
  return v;
}

GradedSubspace random_subspace(int nvars, int degree, std::size_t codim, Rng& rng,
                               const ComputeContext& ctx) {
  const std::size_t ambient = dim_graded(nvars, degree);
  require(codim <= ambient, ErrorCode::InvalidArgument,
          "codimension " + std::to_string(codim) + " exceeds dim S^" + std::to_string(degree));
  const std::size_t want = ambient - codim;
  check_budget(static_cast<std::uint64_t>(want) * ambient, ctx.limits, "random subspace");
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<SparseVector> gens;
    gens.reserve(want);
    for (std::size_t i = 0; i < want; ++i) gens.push_back(random_vector(ambient, rng, ctx.field));
    auto w = GradedSubspace::span(nvars, degree, gens, ctx);
    if (w.dim() == want) return w;
  }
  fail(ErrorCode::Sampling, "could not sample a subspace of the requested codimension");
}

GradedSubspace random_subspace_containing(const GradedSubspace& base, std::size_t codim,
                                          Rng& rng, const ComputeContext& ctx) {
  const std::size_t q = base.codim();
  require(codim <= q, ErrorCode::InvalidArgument,
          "requested codimension " + std::to_string(codim) + " exceeds codimension " +
              std::to_string(q) + " of the contained subspace");
  const auto& free = base.free_columns();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    // functionals on the quotient, one per row; a vector of S^k/base is
    // given by its free-column coordinates
    std::vector<SparseVector> functionals;
    for (std::size_t i = 0; i < codim; ++i) functionals.push_back(random_vector(q, rng, ctx.field));
    if (rank_of_vectors(functionals, q, ctx) != codim) continue;
    // images of quotient basis vectors under the functionals
    std::vector<SparseVector> images(q);
    for (std::size_t i = 0; i < codim; ++i)
      for (std::size_t t = 0; t < functionals[i].size(); ++t)
        images[functionals[i].idx[t]].push(static_cast<std::uint32_t>(i), functionals[i].val[t]);
    std::vector<SparseVector> gens = base.basis();
    for (const auto& kv : kernel_basis(images, codim, ctx)) {
      SparseVector v;
      for (std::size_t t = 0; t < kv.size(); ++t) v.push(free[kv.idx[t]], kv.val[t]);
      gens.push_back(std::move(v));
    }
    auto out = GradedSubspace::span(base.nvars(), base.degree(), gens, ctx);
    if (out.codim() == codim) return out;
  }
  fail(ErrorCode::Sampling, "could not sample a subspace containing the given one");
}

}  // namespace hodgekit
