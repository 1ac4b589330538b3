#include "koszul/koszul.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "core/random.hpp"
#include "koszul/linear_system.hpp"

namespace hodgekit {

KoszulModule KoszulModule::polynomial_ring(int nvars) {
  require(nvars >= 1 && nvars <= kMaxVars, ErrorCode::InvalidArgument,
          "variable count out of range");
  KoszulModule m;
  m.n_ = nvars;
  return m;
}

KoszulModule KoszulModule::jacobian_ring(std::shared_ptr<const JacobianRing> ring) {
  require(ring != nullptr, ErrorCode::InvalidArgument, "null Jacobian ring");
  KoszulModule m;
  m.n_ = ring->nvars();
  m.ring_ = std::move(ring);
  return m;
}

std::uint64_t KoszulModule::dim(int k) const {
  if (k < 0) return 0;
  return ring_ ? ring_->hilbert(k) : dim_graded(n_, k);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(INT64_MAX))
      fail(ErrorCode::ParameterTooLarge, "binomial coefficient overflows");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t combination_rank(const std::vector<std::uint32_t>& tuple, std::uint64_t w) {
  // tuples before `tuple`: for each position i, those agreeing on the prefix
  // and taking a smaller value x at i, completed from (x, w)
  const std::uint64_t t = tuple.size();
  std::uint64_t r = 0;
  std::uint64_t lo = 0;
  for (std::uint64_t i = 0; i < t; ++i) {
    for (std::uint64_t x = lo; x < tuple[i]; ++x) r += binomial(w - x - 1, t - i - 1);
    lo = tuple[i] + 1;
  }
  return r;
}

namespace {

using Tuple = std::vector<std::uint32_t>;

std::vector<Tuple> combinations(std::size_t w, int t) {
  std::vector<Tuple> out;
  if (t < 0 || static_cast<std::size_t>(t) > w) return out;
  Tuple cur(t);
  std::iota(cur.begin(), cur.end(), 0u);
  while (true) {
    out.push_back(cur);
    int i = t - 1;
    while (i >= 0 && cur[i] == w - t + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < t; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Basis of M^k by monomial representatives. For R_f the representatives are
// the free monomials of J^k and `nf` maps each monomial of S^k to its
// coordinates in that basis.
struct Piece {
  int degree = 0;
  std::vector<Monomial> monos;
  bool quotient = false;
  std::vector<SparseVector> nf;

  std::size_t dim() const noexcept { return monos.size(); }
};

Piece make_piece(const KoszulModule& module, int k, bool with_nf) {
  Piece piece;
  piece.degree = k;
  if (k < 0) return piece;
  const auto all = monomial_basis(module.nvars(), k);
  if (!module.is_jacobian()) {
    piece.monos = all;
    return piece;
  }
  piece.quotient = true;
  const auto j = module.ring()->jacobian_piece(k);
  for (auto c : j->free_columns()) piece.monos.push_back(all[c]);
  if (with_nf) {
    piece.nf.resize(all.size());
    SparseVector e;
    for (std::size_t i = 0; i < all.size(); ++i) {
      e.idx.assign(1, static_cast<std::uint32_t>(i));
      e.val.assign(1, 1);
      piece.nf[i] = j->quotient_coordinates(e);
    }
  }
  return piece;
}

struct SystemTerms {
  std::vector<std::vector<std::pair<Monomial, Residue>>> rows;
  std::vector<Monomial> leads;
  std::size_t max_terms = 0;
};

SystemTerms system_terms(const GradedSubspace& w) {
  SystemTerms out;
  const auto mons = monomial_basis(w.nvars(), w.degree());
  for (const auto& row : w.basis()) {
    std::vector<std::pair<Monomial, Residue>> terms;
    for (std::size_t t = 0; t < row.size(); ++t) terms.emplace_back(mons[row.idx[t]], row.val[t]);
    out.max_terms = std::max(out.max_terms, terms.size());
    out.leads.push_back(mons[row.idx[0]]);
    out.rows.push_back(std::move(terms));
  }
  return out;
}

// Columns of M^k ⊗ Λ^t W -> M^{k+N} ⊗ Λ^{t-1} W.
std::vector<SparseVector> differential_columns(const Piece& src, const Piece& dst,
                                               const SystemTerms& sys, int t,
                                               const ComputeContext& ctx) {
  const std::size_t w = sys.rows.size();
  const auto tuples = combinations(w, t);
  std::vector<SparseVector> cols;
  if (t == 0 || tuples.empty() || src.dim() == 0) {
    cols.resize(src.dim() * tuples.size());
    return cols;
  }
  const std::uint64_t target_tuples = binomial(w, t - 1);
  const PrimeField& f = ctx.field;
  cols.reserve(src.dim() * tuples.size());
  std::uint64_t stored = 0;
  std::vector<std::pair<std::uint32_t, Residue>> entries;
  Tuple face(t - 1);
  for (std::size_t u = 0; u < src.dim(); ++u) {
    for (const auto& tuple : tuples) {
      entries.clear();
      for (int i = 0; i < t; ++i) {
        std::copy(tuple.begin(), tuple.begin() + i, face.begin());
        std::copy(tuple.begin() + i + 1, tuple.end(), face.begin() + i);
        const std::uint64_t face_rank = combination_rank(face, w);
        const bool negate = (i % 2) == 1;
        for (const auto& [mon, c] : sys.rows[tuple[i]]) {
          const Residue coeff = negate ? f.neg(c) : c;
          const auto target = product_index(src.monos[u], mon);
          if (!dst.quotient) {
            entries.emplace_back(static_cast<std::uint32_t>(target * target_tuples + face_rank),
                                 coeff);
            continue;
          }
          const auto& nf = dst.nf[target];
          for (std::size_t k = 0; k < nf.size(); ++k)
            entries.emplace_back(static_cast<std::uint32_t>(nf.idx[k] * target_tuples + face_rank),
                                 f.mul(coeff, nf.val[k]));
        }
      }
      cols.push_back(normalize(entries, f));
      stored += cols.back().size();
    }
    check_budget(stored, ctx.limits, "Koszul differential");
  }
  return cols;
}

SparseMatrix from_columns(std::vector<SparseVector> cols, std::size_t rows) {
  SparseMatrix t(cols.size(), rows);
  t.data = std::move(cols);
  return transpose(t);
}

// Sort key of a tensor basis element: the monomial m * Π lead(w_j). The
// leading terms of δ(x) share the key of x; tails of W's basis rows move
// entries to lex-smaller keys.
std::vector<std::size_t> tensor_keys(const Piece& piece, const SystemTerms& sys, int t) {
  const auto tuples = combinations(sys.rows.size(), t);
  std::vector<std::size_t> keys;
  keys.reserve(piece.dim() * tuples.size());
  for (const auto& m : piece.monos)
    for (const auto& tuple : tuples) {
      Monomial key = m;
      for (auto j : tuple) key = key * sys.leads[j];
      keys.push_back(key.index());
    }
  return keys;
}

std::vector<std::size_t> order_by_key(const std::vector<std::size_t>& keys, bool descending) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return descending ? keys[x] > keys[y] : keys[x] < keys[y];
  });
  return order;
}

// Rank of the matrix whose columns are `cols`, stopping at `cap`.
//
// Works on the transpose: target basis elements are inserted by increasing
// key, source coordinates pivoted by decreasing key. Inserting the columns
// directly is far slower once W's basis rows have tails.
std::size_t ordered_rank(const std::vector<SparseVector>& cols, std::size_t rows,
                         const Piece& src, const Piece& dst, const SystemTerms& sys, int t,
                         const ComputeContext& ctx, std::size_t cap) {
  if (cols.empty() || rows == 0) return 0;
  const auto src_order = order_by_key(tensor_keys(src, sys, t), true);
  std::vector<std::uint32_t> position(src_order.size());
  for (std::size_t i = 0; i < src_order.size(); ++i)
    position[src_order[i]] = static_cast<std::uint32_t>(i);
  const auto dst_order = order_by_key(tensor_keys(dst, sys, t - 1), false);

  SparseMatrix by_col;
  by_col.rows = cols.size();
  by_col.cols = rows;
  by_col.data = cols;
  // rows of the differential, indexed by target element
  const SparseMatrix m = transpose(by_col);

  RowEchelon ech(ctx.field, src_order.size(), ctx.limits.cell_budget);
  cap = std::min({cap, src_order.size(), rows});
  std::vector<std::pair<std::uint32_t, Residue>> entries;
  for (auto r : dst_order) {
    if (ech.rank() >= cap) break;
    const auto& row = m.data[r];
    if (row.empty()) continue;
    entries.clear();
    for (std::size_t k = 0; k < row.size(); ++k) entries.emplace_back(position[row.idx[k]], row.val[k]);
    ech.insert(normalize(entries, ctx.field));
  }
  return ech.rank();
}

struct SliceColumns {
  Piece left, mid, right;
  SystemTerms sys;
  std::vector<SparseVector> in_cols, out_cols;
  std::size_t in_rows = 0, out_rows = 0;
};

SliceColumns build_columns(const KoszulModule& module, const GradedSubspace& w, int a, int s,
                           const ComputeContext& ctx) {
  require(s >= 0, ErrorCode::InvalidArgument, "exterior index s must be >= 0");
  require(w.nvars() == module.nvars(), ErrorCode::InvalidArgument,
          "linear system and module live in different rings");
  require(w.field() == ctx.field, ErrorCode::ModulusMismatch, "linear system over another field");
  if (module.is_jacobian())
    require(module.ring()->context().field == ctx.field, ErrorCode::ModulusMismatch,
            "Jacobian ring over another field");
  check_budget(estimate_slice_entries(module, w, a, s), ctx.limits, "Koszul slice");
  const int N = w.degree();
  SliceColumns sc;
  sc.sys = system_terms(w);
  const std::size_t wd = w.dim();
  sc.left = make_piece(module, a, false);
  sc.mid = make_piece(module, a + N, true);
  sc.right = make_piece(module, a + 2 * N, true);
  sc.in_rows = sc.mid.dim() * binomial(wd, s);
  sc.out_rows = s >= 1 ? sc.right.dim() * binomial(wd, s - 1) : 0;
  sc.in_cols = differential_columns(sc.left, sc.mid, sc.sys, s + 1, ctx);
  sc.out_cols = differential_columns(sc.mid, sc.right, sc.sys, s, ctx);
  return sc;
}

}  // namespace

std::uint64_t estimate_slice_entries(const KoszulModule& module, const GradedSubspace& w, int a,
                                     int s) {
  const int N = w.degree();
  std::size_t max_terms = 1;
  for (const auto& row : w.basis()) max_terms = std::max(max_terms, row.size());
  const std::uint64_t wd = w.dim();
  const auto left = module.dim(a);
  const auto mid = module.dim(a + N);
  const auto right = module.dim(a + 2 * N);
  // a product lands on one monomial in S, on at most dim M^{k+N} basis
  // elements in R_f
  const std::uint64_t spread_mid = module.is_jacobian() ? std::max<std::uint64_t>(mid, 1) : 1;
  const std::uint64_t spread_right = module.is_jacobian() ? std::max<std::uint64_t>(right, 1) : 1;
  const unsigned __int128 in = static_cast<unsigned __int128>(left) * binomial(wd, s + 1) *
                               (s + 1) * max_terms * spread_mid;
  const unsigned __int128 out = s >= 1 ? static_cast<unsigned __int128>(mid) * binomial(wd, s) *
                                             s * max_terms * spread_right
                                       : 0;
  const unsigned __int128 total = in + out;
  return total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
}

KoszulSlice koszul_slice(const KoszulModule& module, const GradedSubspace& w, int a, int s,
                         const ComputeContext& ctx) {
  auto sc = build_columns(module, w, a, s, ctx);
  KoszulSlice slice;
  slice.module = module.name();
  slice.a = a;
  slice.s = s;
  slice.N = w.degree();
  slice.w = w.dim();
  slice.dim_left = sc.left.dim();
  slice.dim_mid = sc.mid.dim();
  slice.dim_right = sc.right.dim();
  slice.delta_in = from_columns(std::move(sc.in_cols), sc.in_rows);
  slice.delta_out = from_columns(std::move(sc.out_cols), sc.out_rows);
  return slice;
}

bool composes_to_zero(const KoszulSlice& slice, const ComputeContext& ctx) {
  if (slice.delta_out.cols == 0 || slice.delta_in.cols == 0) return true;
  return multiply(slice.delta_out, slice.delta_in, ctx.field).nonzeros() == 0;
}

KoszulReport middle_exactness(const KoszulModule& module, const GradedSubspace& w, int a, int s,
                              const ComputeContext& ctx) {
  auto sc = build_columns(module, w, a, s, ctx);
  KoszulReport r;
  r.module = module.name();
  r.a = a;
  r.s = s;
  r.w = w.dim();
  r.in_rows = sc.in_rows;
  r.in_cols = sc.in_cols.size();
  r.out_rows = sc.out_rows;
  r.out_cols = sc.out_cols.size();
  const std::size_t rank_out =
      s >= 1 ? ordered_rank(sc.out_cols, sc.out_rows, sc.mid, sc.right, sc.sys, s, ctx, sc.out_rows)
             : 0;
  r.kernel_out = r.out_cols - rank_out;
  // image ⊆ kernel, so reaching kernel_out settles exactness
  r.rank_in =
      ordered_rank(sc.in_cols, sc.in_rows, sc.left, sc.mid, sc.sys, s + 1, ctx, r.kernel_out);
  r.defect = r.kernel_out - r.rank_in;
  r.exact = r.defect == 0;
  return r;
}

void check_green_scan_budget(const GreenScanParams& params, const ComputeContext& ctx) {
  const auto module = KoszulModule::polynomial_ring(params.n);
  const std::uint64_t ambient = dim_graded(params.n, params.N);
  for (int c : params.codims) {
    require(c >= 0 && static_cast<std::uint64_t>(c) <= ambient, ErrorCode::InvalidArgument,
            "codimension " + std::to_string(c) + " out of range for S^" + std::to_string(params.N));
    // shape only: a W of this codimension with (1 + c)-term RREF rows
    const std::uint64_t wd = ambient - c;
    for (int a = params.a_min; a <= params.a_max; ++a)
      for (int s = 0; s <= params.s_max; ++s) {
        const auto left = module.dim(a);
        const auto mid = module.dim(a + params.N);
        const unsigned __int128 entries =
            static_cast<unsigned __int128>(left) * binomial(wd, s + 1) * (s + 1) * (1 + c) +
            (s >= 1 ? static_cast<unsigned __int128>(mid) * binomial(wd, s) * s * (1 + c) : 0);
        if (entries > ctx.limits.cell_budget)
          fail(ErrorCode::SizeBudget,
               "green-scan cell (codim " + std::to_string(c) + ", a " + std::to_string(a) +
                   ", s " + std::to_string(s) + ") exceeds the budget of " +
                   std::to_string(ctx.limits.cell_budget) + " entries");
      }
  }
}

GreenScanResult green_scan(const GreenScanParams& params, const ComputeContext& ctx) {
  require(params.n >= 1 && params.N >= 1 && params.trials >= 1 && params.s_max >= 0 &&
              params.a_max >= params.a_min,
          ErrorCode::InvalidArgument, "invalid green-scan parameters");
  check_green_scan_budget(params, ctx);
  GreenScanResult result;
  result.params = params;
  const auto module = KoszulModule::polynomial_ring(params.n);
  const std::uint64_t ambient = dim_graded(params.n, params.N);
  const int bound = default_bpf_bound(params.n, params.N);
  for (int c : params.codims) {
    for (int trial = 0; trial < params.trials; ++trial) {
      const std::uint64_t tag = (static_cast<std::uint64_t>(params.n) << 48) ^
                                (static_cast<std::uint64_t>(params.N) << 32) ^
                                (static_cast<std::uint64_t>(c) << 16) ^
                                static_cast<std::uint64_t>(trial);
      Rng rng(derive_seed(params.seed, tag));
      std::optional<GradedSubspace> w;
      int bpf_degree = -1;
      // fewer than n forms always share a zero
      if (ambient - c >= static_cast<std::uint64_t>(params.n)) {
        for (int attempt = 0; attempt < params.max_sampling_attempts && !w; ++attempt) {
          auto cand = random_subspace(params.n, params.N, c, rng, ctx);
          const auto status = bpf_check(cand, bound, ctx);
          if (status.verified()) {
            bpf_degree = *status.verified_degree;
            w = std::move(cand);
          }
        }
      }
      if (!w) ++result.sampling_failures;
      for (int a = params.a_min; a <= params.a_max; ++a)
        for (int s = 0; s <= params.s_max; ++s) {
          GreenCell cell{params.n, params.N, c, trial, a, s, a >= s + c, std::nullopt, bpf_degree};
          if (w) {
            cell.report = middle_exactness(module, *w, a, s, ctx);
            if (cell.bound_holds && !cell.report->exact) ++result.in_bound_defects;
          }
          result.cells.push_back(std::move(cell));
        }
    }
  }
  return result;
}

JacobianKoszulReport jacobian_koszul_check(std::shared_ptr<const JacobianRing> ring,
                                           const GradedSubspace& w, int p, int s,
                                           const ComputeContext& ctx) {
  require(ring != nullptr, ErrorCode::InvalidArgument, "null Jacobian ring");
  require(ring->is_smooth(), ErrorCode::NotSmooth,
          "hypersurface not certified smooth: " + ring->smoothness().reason);
  const int N = ring->degree();
  const int d = ring->dimension();
  require(w.degree() == N && w.nvars() == ring->nvars(), ErrorCode::DegreeMismatch,
          "linear system must live in S^" + std::to_string(N));
  require(w.contains(*ring->jacobian_piece(N)), ErrorCode::NotContained,
          "linear system does not contain J_f^" + std::to_string(N));
  JacobianKoszulReport out;
  out.p = p;
  out.codim_w = w.codim();
  const int a = -d - 2 + N * p;
  out.green_bound = a >= s + static_cast<int>(w.codim());
  out.transfer_bound = -d - 2 + N * (p + 1) >= N - 1;
  out.report = middle_exactness(KoszulModule::jacobian_ring(std::move(ring)), w, a, s, ctx);
  return out;
}

}  // namespace hodgekit
