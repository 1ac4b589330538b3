#include "hodgekit/hodgekit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/error.hpp"
#include "core/random.hpp"
#include "criteria/criteria.hpp"
#include "jacobian/hodge.hpp"
#include "koszul/koszul.hpp"
#include "report/report.hpp"
#include "yukawa/yukawa.hpp"

using namespace hodgekit;

struct hk_context {
  ComputeContext ctx;
};

struct hk_polynomial {
  Polynomial poly;
};

struct hk_jacobian {
  std::shared_ptr<const JacobianRing> ring;
};

struct hk_subspace {
  GradedSubspace space;
};

namespace {

// stream tags for seeds handed in through the API
constexpr std::uint64_t kTagForm = 0x666f726d;
constexpr std::uint64_t kTagSubspace = 0x73756273;

thread_local std::string last_error;

hk_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HK_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HK_ERR_PARSE;
    case ErrorCode::NotSmooth: return HK_ERR_NOT_SMOOTH;
    case ErrorCode::SizeBudget: return HK_ERR_SIZE_BUDGET;
    case ErrorCode::ParameterTooLarge: return HK_ERR_PARAMETER_TOO_LARGE;
    case ErrorCode::DegreeMismatch: return HK_ERR_DEGREE_MISMATCH;
    case ErrorCode::ModulusMismatch: return HK_ERR_MODULUS_MISMATCH;
    case ErrorCode::NotContained: return HK_ERR_NOT_CONTAINED;
    case ErrorCode::Sampling: return HK_ERR_SAMPLING;
    case ErrorCode::UndefinedLevel: return HK_ERR_UNDEFINED_LEVEL;
  }
  return HK_ERR_INTERNAL;
}

template <class F>
hk_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return HK_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HK_ERR_SIZE_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return HK_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  require(p != nullptr, ErrorCode::InvalidArgument, std::string("null ") + what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

report::Format to_format(hk_format f) {
  switch (f) {
    case HK_FORMAT_JSON: return report::Format::Json;
    case HK_FORMAT_CSV: return report::Format::Csv;
    case HK_FORMAT_TABLE: return report::Format::Table;
  }
  fail(ErrorCode::InvalidArgument, "unknown output format");
}

report::RunMeta to_meta(const hk_meta* meta, std::uint32_t prime) {
  report::RunMeta m;
  m.prime = prime;
  if (meta) {
    if (meta->has_seed) m.seed = meta->seed;
    if (meta->source) m.source = meta->source;
  }
  return m;
}

const ComputeContext& ring_context(const hk_jacobian* ring) { return ring->ring->context(); }

}  // namespace

extern "C" {

const char* hk_version(void) { return "0.1.0"; }

const char* hk_status_string(hk_status status) {
  switch (status) {
    case HK_OK: return "ok";
    case HK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HK_ERR_PARSE: return "parse error";
    case HK_ERR_NOT_SMOOTH: return "hypersurface not certified smooth";
    case HK_ERR_SIZE_BUDGET: return "size budget exceeded";
    case HK_ERR_PARAMETER_TOO_LARGE: return "parameter too large";
    case HK_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case HK_ERR_MODULUS_MISMATCH: return "modulus mismatch";
    case HK_ERR_NOT_CONTAINED: return "containment precondition failed";
    case HK_ERR_SAMPLING: return "random sampling failed";
    case HK_ERR_UNDEFINED_LEVEL: return "Hodge level undefined";
    case HK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hk_last_error(void) { return last_error.c_str(); }

void hk_string_free(char* s) { std::free(s); }

hk_status hk_context_create(uint32_t prime, uint64_t cell_budget, hk_context** out) {
  return guard([&] {
    need(out, "output handle");
    *out = nullptr;
    *out = new hk_context{ComputeContext(prime ? prime : kDefaultPrime,
                                         cell_budget ? cell_budget : kDefaultCellBudget)};
  });
}

void hk_context_destroy(hk_context* ctx) { delete ctx; }

uint32_t hk_context_prime(const hk_context* ctx) { return ctx ? ctx->ctx.field.modulus() : 0; }
uint64_t hk_default_cell_budget(void) { return kDefaultCellBudget; }
uint32_t hk_default_prime(void) { return kDefaultPrime; }
uint32_t hk_cross_check_prime(void) { return kCrossCheckPrime; }

hk_status hk_polynomial_parse(const hk_context* ctx, const char* text, int nvars,
                              hk_polynomial** out) {
  return guard([&] {
    need(ctx, "context");
    need(text, "text");
    need(out, "output handle");
    *out = nullptr;
    *out = new hk_polynomial{parse_polynomial(text, nvars, ctx->ctx.field)};
  });
}

hk_status hk_polynomial_fermat(const hk_context* ctx, int nvars, int degree, hk_polynomial** out) {
  return guard([&] {
    need(ctx, "context");
    need(out, "output handle");
    *out = nullptr;
    *out = new hk_polynomial{Polynomial::fermat(nvars, degree, ctx->ctx.field)};
  });
}

hk_status hk_polynomial_random_smooth(const hk_context* ctx, int d, int degree, uint64_t seed,
                                      hk_polynomial** out) {
  return guard([&] {
    need(ctx, "context");
    need(out, "output handle");
    *out = nullptr;
    Rng rng(derive_seed(seed, kTagForm));
    *out = new hk_polynomial{random_smooth_form(d, degree, rng, ctx->ctx)};
  });
}

hk_status hk_polynomial_to_string(const hk_polynomial* f, char** out) {
  return guard([&] {
    need(f, "polynomial");
    need(out, "output string");
    *out = nullptr;
    *out = copy_string(f->poly.to_string());
  });
}

void hk_polynomial_destroy(hk_polynomial* f) { delete f; }

hk_status hk_jacobian_create(const hk_context* ctx, const hk_polynomial* f, hk_jacobian** out) {
  return guard([&] {
    need(ctx, "context");
    need(f, "polynomial");
    need(out, "output handle");
    *out = nullptr;
    auto ring = std::make_shared<const JacobianRing>(Hypersurface(f->poly), ctx->ctx);
    *out = new hk_jacobian{std::move(ring)};
  });
}

void hk_jacobian_destroy(hk_jacobian* ring) { delete ring; }

hk_status hk_jacobian_dimension(const hk_jacobian* ring, int* d, int* degree) {
  return guard([&] {
    need(ring, "ring");
    if (d) *d = ring->ring->dimension();
    if (degree) *degree = ring->ring->degree();
  });
}

hk_status hk_jacobian_socle_degree(const hk_jacobian* ring, int* out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output");
    *out = ring->ring->socle_degree();
  });
}

hk_status hk_jacobian_hilbert(const hk_jacobian* ring, int k, uint64_t* out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output");
    *out = ring->ring->hilbert(k);
  });
}

hk_status hk_jacobian_is_smooth(const hk_jacobian* ring, int* out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output");
    *out = ring->ring->is_smooth() ? 1 : 0;
  });
}

hk_status hk_jacobian_hodge_numbers(const hk_jacobian* ring, uint64_t* out, size_t capacity,
                                    size_t* count) {
  return guard([&] {
    need(ring, "ring");
    const auto h = hodge_numbers_prim(*ring->ring);
    if (count) *count = h.entries.size();
    require(out != nullptr && capacity >= h.entries.size(), ErrorCode::InvalidArgument,
            "output buffer needs " + std::to_string(h.entries.size()) + " entries");
    for (std::size_t i = 0; i < h.entries.size(); ++i) out[i] = h.entries[i].h;
  });
}

hk_status hk_jacobian_hodge_level(const hk_jacobian* ring, int* out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output");
    *out = hodge_level(hodge_numbers_prim(*ring->ring));
  });
}

hk_status hk_subspace_full(const hk_context* ctx, int nvars, int degree, hk_subspace** out) {
  return guard([&] {
    need(ctx, "context");
    need(out, "output handle");
    *out = nullptr;
    *out = new hk_subspace{GradedSubspace::full(nvars, degree, ctx->ctx.field)};
  });
}

hk_status hk_subspace_jacobian_piece(const hk_jacobian* ring, int k, hk_subspace** out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output handle");
    *out = nullptr;
    *out = new hk_subspace{*ring->ring->jacobian_piece(k)};
  });
}

hk_status hk_subspace_random(const hk_context* ctx, int nvars, int degree, size_t codim,
                             uint64_t seed, hk_subspace** out) {
  return guard([&] {
    need(ctx, "context");
    need(out, "output handle");
    *out = nullptr;
    Rng rng(derive_seed(seed, kTagSubspace));
    *out = new hk_subspace{random_subspace(nvars, degree, codim, rng, ctx->ctx)};
  });
}

hk_status hk_subspace_random_containing(const hk_context* ctx, const hk_subspace* base,
                                        size_t codim, uint64_t seed, hk_subspace** out) {
  return guard([&] {
    need(ctx, "context");
    need(base, "base subspace");
    need(out, "output handle");
    *out = nullptr;
    Rng rng(derive_seed(seed, kTagSubspace));
    *out = new hk_subspace{random_subspace_containing(base->space, codim, rng, ctx->ctx)};
  });
}

hk_status hk_subspace_dims(const hk_subspace* v, int* nvars, int* degree, size_t* dim,
                           size_t* ambient) {
  return guard([&] {
    need(v, "subspace");
    if (nvars) *nvars = v->space.nvars();
    if (degree) *degree = v->space.degree();
    if (dim) *dim = v->space.dim();
    if (ambient) *ambient = v->space.ambient_dim();
  });
}

hk_status hk_subspace_contains(const hk_subspace* big, const hk_subspace* small, int* out) {
  return guard([&] {
    need(big, "subspace");
    need(small, "subspace");
    need(out, "output");
    *out = big->space.contains(small->space) ? 1 : 0;
  });
}

void hk_subspace_destroy(hk_subspace* v) { delete v; }

hk_status hk_bpf_check(const hk_context* ctx, const hk_subspace* w, int m_max, int* degree) {
  return guard([&] {
    need(ctx, "context");
    need(w, "linear system");
    need(degree, "output");
    const int bound =
        m_max > 0 ? m_max : default_bpf_bound(w->space.nvars(), w->space.degree());
    const auto st = bpf_check(w->space, bound, ctx->ctx);
    *degree = st.verified() ? *st.verified_degree : -1;
  });
}

hk_status hk_koszul_middle(const hk_context* ctx, const hk_jacobian* ring, const hk_subspace* w,
                           int a, int s, hk_koszul_result* out) {
  return guard([&] {
    need(ctx, "context");
    need(w, "linear system");
    need(out, "output");
    const auto module = ring ? KoszulModule::jacobian_ring(ring->ring)
                             : KoszulModule::polynomial_ring(w->space.nvars());
    const auto r = middle_exactness(module, w->space, a, s, ctx->ctx);
    *out = {r.rank_in, r.kernel_out, r.defect, r.exact ? 1 : 0};
  });
}

hk_status hk_criterion(int d, int N, int r, int C, hk_criterion_result* out) {
  return guard([&] {
    need(out, "output");
    const auto rep = sweep_criterion({d, N, r, C});
    *out = {rep.gamma, rep.ineq1_slack, rep.ineq2_slack, rep.pass ? 1 : 0,
            rep.degree_hypothesis ? 1 : 0};
  });
}

hk_status hk_genus_threshold(int d, int g, int* n_min, int* closed_form) {
  return guard([&] {
    const int scan = genus_threshold(d, g);
    const int closed = genus_threshold_closed_form(d, g);
    if (n_min) *n_min = scan;
    if (closed_form) *closed_form = closed;
  });
}

hk_status hk_per_i_monotonicity(int d, int N, int r, int C, int* out) {
  return guard([&] {
    need(out, "output");
    *out = per_i_monotonicity({d, N, r, C}) ? 1 : 0;
  });
}

hk_status hk_socle_pairing_rank(const hk_jacobian* ring, const hk_subspace* a,
                                const hk_subspace* b, size_t* out) {
  return guard([&] {
    need(ring, "ring");
    need(a, "subspace");
    need(b, "subspace");
    need(out, "output");
    *out = socle_pairing_rank(*ring->ring, a->space, b->space);
  });
}

hk_status hk_yukawa_nonvanishing(const hk_jacobian* ring, const hk_subspace* k, int* out) {
  return guard([&] {
    need(ring, "ring");
    need(k, "subspace");
    need(out, "output");
    *out = yukawa_nonvanishing(*ring->ring, k->space) ? 1 : 0;
  });
}

hk_status hk_report_hodge(const hk_jacobian* ring, const hk_meta* meta, hk_format format,
                          char** out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output string");
    *out = nullptr;
    *out = copy_string(report::hodge(*ring->ring,
                                     to_meta(meta, ring_context(ring).field.modulus()),
                                     to_format(format)));
  });
}

hk_status hk_report_hilbert(const hk_jacobian* ring, int k_max, const hk_meta* meta,
                            hk_format format, char** out) {
  return guard([&] {
    need(ring, "ring");
    need(out, "output string");
    *out = nullptr;
    *out = copy_string(report::hilbert(*ring->ring, k_max,
                                       to_meta(meta, ring_context(ring).field.modulus()),
                                       to_format(format)));
  });
}

hk_status hk_report_green_scan(const hk_context* ctx, const hk_green_params* params,
                               hk_format format, char** out, size_t* in_bound_defects,
                               size_t* sampling_failures) {
  return guard([&] {
    need(ctx, "context");
    need(params, "parameters");
    need(out, "output string");
    *out = nullptr;
    require(params->codim_count == 0 || params->codims != nullptr, ErrorCode::InvalidArgument,
            "null codimension list");
    GreenScanParams p;
    p.n = params->n;
    p.N = params->N;
    p.codims.assign(params->codims, params->codims + params->codim_count);
    p.a_min = params->a_min;
    p.a_max = params->a_max;
    p.s_max = params->s_max;
    p.trials = params->trials;
    p.seed = params->seed;
    const auto result = green_scan(p, ctx->ctx);
    report::RunMeta meta;
    meta.prime = ctx->ctx.field.modulus();
    meta.seed = params->seed;
    *out = copy_string(report::green_scan(result, meta, to_format(format)));
    if (in_bound_defects) *in_bound_defects = result.in_bound_defects;
    if (sampling_failures) *sampling_failures = result.sampling_failures;
  });
}

hk_status hk_report_koszul(const hk_context* ctx, const hk_jacobian* ring, const hk_subspace* w,
                           int a_or_p, int s, const hk_meta* meta, hk_format format, char** out,
                           int* exact) {
  return guard([&] {
    need(ctx, "context");
    need(w, "linear system");
    need(out, "output string");
    *out = nullptr;
    report::KoszulCheck check;
    check.n = w->space.nvars();
    check.N = w->space.degree();
    check.codim_w = w->space.codim();
    if (ring) {
      auto jr = jacobian_koszul_check(ring->ring, w->space, a_or_p, s, ctx->ctx);
      check.report = jr.report;
      check.jacobian = std::move(jr);
    } else {
      check.report = middle_exactness(KoszulModule::polynomial_ring(check.n), w->space, a_or_p, s,
                                      ctx->ctx);
    }
    *out = copy_string(
        report::koszul(check, to_meta(meta, ctx->ctx.field.modulus()), to_format(format)));
    if (exact) *exact = check.report.exact ? 1 : 0;
  });
}

hk_status hk_report_sweep(int d, int N, int r, int C, hk_format format, char** out, int* pass) {
  return guard([&] {
    need(out, "output string");
    *out = nullptr;
    const auto rep = sweep_criterion({d, N, r, C});
    *out = copy_string(report::sweep({rep}, to_format(format)));
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

hk_status hk_report_sweep_abelian(int d, hk_format format, char** out, int* all_pass) {
  return guard([&] {
    need(out, "output string");
    *out = nullptr;
    const auto rows = abelian_sweep_table(d);
    bool ok = true;
    for (const auto& r : rows)
      if (r.input.r >= 2) ok = ok && r.pass;
    *out = copy_string(report::sweep(rows, to_format(format)));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

hk_status hk_report_sweep_genus(int d, int g, int N, hk_format format, char** out, int* pass) {
  return guard([&] {
    need(out, "output string");
    *out = nullptr;
    const auto rep = sweep_criterion({d, N, 1, genus_moduli_dimension(g)});
    *out = copy_string(report::sweep({rep}, to_format(format)));
    if (pass) *pass = rep.pass ? 1 : 0;
  });
}

hk_status hk_report_genus_threshold(int d, int g, hk_format format, char** out, int* matches) {
  return guard([&] {
    need(out, "output string");
    *out = nullptr;
    report::ThresholdRow row{d, g, genus_moduli_dimension(g), genus_threshold(d, g),
                             genus_threshold_closed_form(d, g)};
    *out = copy_string(report::threshold({row}, to_format(format)));
    if (matches) *matches = row.n_min == row.closed_form ? 1 : 0;
  });
}

hk_status hk_report_yukawa_chain(const hk_jacobian* ring, const hk_subspace* k,
                                 const hk_meta* meta, hk_format format, char** out,
                                 int* all_ok) {
  return guard([&] {
    need(ring, "ring");
    need(k, "subspace");
    need(out, "output string");
    *out = nullptr;
    const auto chain = yukawa_chain(*ring->ring, k->space);
    *out = copy_string(report::yukawa(chain, *ring->ring,
                                      to_meta(meta, ring_context(ring).field.modulus()),
                                      to_format(format)));
    if (all_ok) *all_ok = chain.all_ok() ? 1 : 0;
  });
}

hk_status hk_report_bpf(const hk_context* ctx, const hk_subspace* w, int m_max,
                        const hk_meta* meta, hk_format format, char** out, int* verified) {
  return guard([&] {
    need(ctx, "context");
    need(w, "linear system");
    need(out, "output string");
    *out = nullptr;
    report::BpfRun run;
    run.n = w->space.nvars();
    run.N = w->space.degree();
    run.codim = w->space.codim();
    run.m_max = m_max > 0 ? m_max : default_bpf_bound(run.n, run.N);
    run.status = bpf_check(w->space, run.m_max, ctx->ctx);
    *out = copy_string(
        report::bpf(run, to_meta(meta, ctx->ctx.field.modulus()), to_format(format)));
    if (verified) *verified = run.status.verified() ? 1 : 0;
  });
}

}  // extern "C"
