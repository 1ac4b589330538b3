#include "jacobian/hodge.hpp"

#include <algorithm>
#include <optional>

#include "core/error.hpp"

namespace hodgekit {

int residue_degree(int d, int N, int p) noexcept { return N * (p + 1) - d - 2; }

HodgeVector hodge_numbers_prim(const JacobianRing& ring) {
  const auto& cert = ring.smoothness();
  require(cert.smooth, ErrorCode::NotSmooth, "hypersurface not certified smooth: " + cert.reason);
  const int d = ring.dimension();
  const int N = ring.degree();
  HodgeVector out;
  out.weight = d;
  for (int p = 0; p <= d; ++p)
    out.entries.push_back({d - p, p, ring.hilbert(residue_degree(d, N, p))});
  return out;
}

int hodge_level(const HodgeVector& h) {
  std::optional<int> level;
  for (const auto& e : h.entries)
    if (e.h != 0) level = std::max(level.value_or(e.p - e.q), e.p - e.q);
  require(level.has_value(), ErrorCode::UndefinedLevel, "Hodge level of a zero Hodge structure");
  return *level;
}

}  // namespace hodgekit
