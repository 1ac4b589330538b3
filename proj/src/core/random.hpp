#pragma once

#include <cstdint>
#include <random>

#include "core/context.hpp"
#include "core/subspace.hpp"

namespace hodgekit {

/// splitmix64 finalizer; derives independent stream seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix_seed(seed ^ mix_seed(tag));
}

/// Seeded generator: std::mt19937_64 plus rejection sampling, so draws are
/// identical across standard libraries (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % bound;
  }

  Residue residue(const PrimeField& f) { return static_cast<Residue>(below(f.modulus())); }
  Residue nonzero_residue(const PrimeField& f) {
    return static_cast<Residue>(1 + below(f.modulus() - 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// Dense vector with uniform coordinates in a space of the given dimension.
SparseVector random_vector(std::size_t dim, Rng& rng, const PrimeField& field);

/// Uniformly random subspace of S^k with exact codimension `codim`.
GradedSubspace random_subspace(int nvars, int degree, std::size_t codim, Rng& rng,
                               const ComputeContext& ctx);

/// Random subspace V with base ⊆ V ⊆ S^k and codim V = codim: the common
/// kernel of `codim` random functionals on S^k / base.
GradedSubspace random_subspace_containing(const GradedSubspace& base, std::size_t codim,
                                          Rng& rng, const ComputeContext& ctx);

}  // namespace hodgekit
