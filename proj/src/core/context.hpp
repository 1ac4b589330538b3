#pragma once

#include <cstdint>

#include "core/field.hpp"

namespace hodgekit {

inline constexpr std::uint64_t kDefaultCellBudget = 50'000'000;

/// Resource limits for one computation.
struct Limits {
  /// Upper bound on matrix cells for dense work and on stored nonzeros for
  /// sparse work (assembled matrices and elimination fill alike).
  std::uint64_t cell_budget = kDefaultCellBudget;
  /// Matrices denser than this are eliminated dense.
  double dense_threshold = 0.2;
};

/// Coefficient field plus limits; passed by const reference everywhere.
struct ComputeContext {
  PrimeField field{kDefaultPrime};
  Limits limits{};

  ComputeContext() = default;
  explicit ComputeContext(std::uint32_t prime, std::uint64_t budget = kDefaultCellBudget)
      : field(prime) {
    limits.cell_budget = budget;
  }
};

}  // namespace hodgekit
