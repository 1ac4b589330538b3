#include "yukawa/yukawa.hpp"

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "core/monomial.hpp"

namespace hodgekit {

namespace {

void require_smooth(const JacobianRing& ring) {
  require(ring.is_smooth(), ErrorCode::NotSmooth,
          "the hypersurface is not certified smooth: " + ring.smoothness().reason);
}

// Socle coordinate of every monomial of degree sigma.
std::vector<Residue> socle_functional(const JacobianRing& ring) {
  const auto top = ring.jacobian_piece(ring.socle_degree());
  const std::size_t dim = top->ambient_dim();
  std::vector<Residue> phi(dim, 0);
  SparseVector e;
  for (std::size_t j = 0; j < dim; ++j) {
    e.idx.assign(1, static_cast<std::uint32_t>(j));
    e.val.assign(1, 1);
    const auto q = top->quotient_coordinates(e);
    if (!q.empty()) phi[j] = q.val[0];
  }
  return phi;
}

std::vector<SparseVector> reduced_basis(const JacobianRing& ring, const GradedSubspace& v) {
  const auto j = ring.jacobian_piece(v.degree());
  std::vector<SparseVector> out;
  for (const auto& row : v.basis()) {
    auto r = j->normal_form(row);
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::size_t socle_pairing_rank(const JacobianRing& ring, const GradedSubspace& a,
                               const GradedSubspace& b) {
  require_smooth(ring);
  const int sigma = ring.socle_degree();
  require(a.nvars() == ring.nvars() && b.nvars() == ring.nvars(), ErrorCode::InvalidArgument,
          "subspaces live in a different polynomial ring");
  require(a.field() == ring.context().field && b.field() == ring.context().field,
          ErrorCode::ModulusMismatch, "subspace and ring use different primes");
  require(a.degree() + b.degree() == sigma, ErrorCode::DegreeMismatch,
          "pairing degrees must add up to the socle degree " + std::to_string(sigma));

  const auto& field = ring.context().field;
  const auto ra = reduced_basis(ring, a);
  const auto rb = reduced_basis(ring, b);
  if (ra.empty() || rb.empty()) return 0;
  check_budget(static_cast<std::uint64_t>(ra.size()) * rb.size(), ring.context().limits,
               "socle pairing");

  const auto phi = socle_functional(ring);
  const auto mons_a = monomial_basis(ring.nvars(), a.degree());
  const auto mons_b = monomial_basis(ring.nvars(), b.degree());

  // row s of the pairing, then contract with each b_t
  std::vector<Residue> cells(ra.size() * rb.size(), 0);
  std::vector<Residue> row(mons_b.size());
  for (std::size_t s = 0; s < ra.size(); ++s) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t u = 0; u < ra[s].size(); ++u) {
      const auto& ma = mons_a[ra[s].idx[u]];
      for (std::size_t j = 0; j < mons_b.size(); ++j) {
        const Residue v = phi[product_index(ma, mons_b[j])];
        if (v) row[j] = field.add(row[j], field.mul(ra[s].val[u], v));
      }
    }
    for (std::size_t t = 0; t < rb.size(); ++t) {
      Residue acc = 0;
      for (std::size_t u = 0; u < rb[t].size(); ++u)
        acc = field.add(acc, field.mul(row[rb[t].idx[u]], rb[t].val[u]));
      cells[s * rb.size() + t] = acc;
    }
  }
  return dense_rank(std::move(cells), ra.size(), rb.size(), field);
}

void require_yukawa_input(const JacobianRing& ring, const GradedSubspace& k) {
  const int d = ring.dimension();
  require(ring.degree() == d + 2, ErrorCode::DegreeMismatch,
          "Yukawa couplings need N = d+2 (got N=" + std::to_string(ring.degree()) +
              ", d=" + std::to_string(d) + ")");
  require(d >= 1, ErrorCode::InvalidArgument, "Yukawa couplings need d >= 1");
  require(k.nvars() == ring.nvars() && k.degree() == ring.degree(), ErrorCode::DegreeMismatch,
          "K must be a subspace of S^N");
  require(k.field() == ring.context().field, ErrorCode::ModulusMismatch,
          "K and ring use different primes");
  require_smooth(ring);
  require(k.contains(*ring.jacobian_piece(ring.degree())), ErrorCode::NotContained,
          "K does not contain J_f^N");
}

GradedSubspace iterated_power(const GradedSubspace& k, int times, const ComputeContext& ctx) {
  require(times >= 1, ErrorCode::InvalidArgument, "power must be >= 1");
  GradedSubspace acc = k;
  for (int i = 1; i < times; ++i) acc = product_span(acc, k, ctx);
  return acc;
}

bool yukawa_nonvanishing(const JacobianRing& ring, const GradedSubspace& k) {
  require_yukawa_input(ring, k);
  const int d = ring.dimension();
  const auto kd = iterated_power(k, d, ring.context());
  return !ring.jacobian_piece(ring.socle_degree())->contains(kd);
}

bool YukawaChainReport::all_ok() const {
  for (const auto& s : steps)
    if (!s.ok) return false;
  return !steps.empty();
}

YukawaChainReport yukawa_chain(const JacobianRing& ring, const GradedSubspace& k) {
  require_yukawa_input(ring, k);
  require(!k.is_full(), ErrorCode::InvalidArgument, "K = S^N is not a hyperplane");
  const auto& ctx = ring.context();
  const int n = ring.nvars();

  YukawaChainReport rep;
  rep.d = ring.dimension();
  rep.N = ring.degree();
  rep.sigma = ring.socle_degree();
  const int d = rep.d;
  require(rep.sigma == d * (d + 2), ErrorCode::InvalidArgument,
          "socle degree differs from d(d+2)");
  rep.target_2d4 = dim_graded(n, 2 * d + 4);
  rep.target_sigma = dim_graded(n, rep.sigma);
  auto step = [&](std::string name, std::string expected, std::int64_t got, bool ok) {
    rep.steps.push_back({std::move(name), std::move(expected), got, ok});
  };

  rep.codim_k = k.codim();
  step("k_codim", "= 1", static_cast<std::int64_t>(rep.codim_k), rep.codim_k == 1);

  const auto colon = colon_by_linear_forms(k, ctx);
  rep.colon_codim = colon.codim();
  step("colon_codim", "<= " + std::to_string(d + 2), static_cast<std::int64_t>(rep.colon_codim),
       rep.colon_codim <= static_cast<std::size_t>(d + 2));

  rep.colon_bpf = bpf_check(colon, default_bpf_bound(n, colon.degree()), ctx);
  step("colon_bpf", "verified", rep.colon_bpf.verified() ? *rep.colon_bpf.verified_degree : -1,
       rep.colon_bpf.verified());

  const auto span =
      product_span(GradedSubspace::full(n, d + 3, ctx.field), colon, ctx);
  rep.colon_span_dim = span.dim();
  step("colon_span", "= " + std::to_string(rep.target_2d4),
       static_cast<std::int64_t>(rep.colon_span_dim), rep.colon_span_dim == rep.target_2d4);

  const auto k2 = product_span(k, k, ctx);
  rep.k2_dim = k2.dim();
  step("k_squared", "= " + std::to_string(rep.target_2d4), static_cast<std::int64_t>(rep.k2_dim),
       rep.k2_dim == rep.target_2d4);

  GradedSubspace kd = k2;
  if (d == 1) kd = k;
  for (int i = 2; i < d; ++i) kd = product_span(kd, k, ctx);
  rep.kd_dim = kd.dim();
  step("k_power", "= " + std::to_string(rep.target_sigma), static_cast<std::int64_t>(rep.kd_dim),
       rep.kd_dim == rep.target_sigma);

  const auto top = ring.jacobian_piece(rep.sigma);
  const auto image = subspace_sum(kd, *top, ctx).dim() - top->dim();
  rep.socle_image_nonzero = image != 0;
  step("socle_image", "= 1", static_cast<std::int64_t>(image), rep.socle_image_nonzero);
  return rep;
}

GradedSubspace random_jacobian_hyperplane(const JacobianRing& ring, Rng& rng) {
  return random_subspace_containing(*ring.jacobian_piece(ring.degree()), 1, rng,
                                    ring.context());
}

}  // namespace hodgekit
