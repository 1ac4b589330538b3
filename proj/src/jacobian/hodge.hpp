#pragma once

#include <cstdint>
#include <vector>

#include "jacobian/jacobian_ring.hpp"

namespace hodgekit {

struct HodgeEntry {
  int p = 0;
  int q = 0;
  std::uint64_t h = 0;
};

/// Hodge numbers of one weight, ordered by decreasing p.
struct HodgeVector {
  int weight = 0;
  std::vector<HodgeEntry> entries;
};

/// Residue degree computing h^{d-p,p}: N(p+1) - d - 2.
int residue_degree(int d, int N, int p) noexcept;

/// Primitive middle Hodge numbers h^{d-p,p}_prim = dim R_f^{N(p+1)-d-2},
/// p = 0..d. Throws NotSmooth unless the ring is certified smooth.
HodgeVector hodge_numbers_prim(const JacobianRing& ring);

/// max(p - q) over the nonzero entries; throws UndefinedLevel if all vanish.
int hodge_level(const HodgeVector& h);

}  // namespace hodgekit
