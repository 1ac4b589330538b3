// Command-line front end; talks to the library only through the C API.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hodgekit/hodgekit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Failure {
  hk_status status;
  std::string message;
};

int exit_code(hk_status s) {
  switch (s) {
    case HK_OK: return kExitOk;
    case HK_ERR_SIZE_BUDGET:
    case HK_ERR_PARAMETER_TOO_LARGE: return kExitBudget;
    case HK_ERR_INVALID_ARGUMENT:
    case HK_ERR_PARSE:
    case HK_ERR_DEGREE_MISMATCH:
    case HK_ERR_MODULUS_MISMATCH:
    case HK_ERR_NOT_CONTAINED: return kExitUsage;
    default: return kExitAssertion;
  }
}

void check(hk_status s) {
  if (s != HK_OK) throw Failure{s, hk_last_error()};
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using Context = std::unique_ptr<hk_context, Deleter<hk_context, hk_context_destroy>>;
using Poly = std::unique_ptr<hk_polynomial, Deleter<hk_polynomial, hk_polynomial_destroy>>;
using Ring = std::unique_ptr<hk_jacobian, Deleter<hk_jacobian, hk_jacobian_destroy>>;
using Subspace = std::unique_ptr<hk_subspace, Deleter<hk_subspace, hk_subspace_destroy>>;

std::string take(char* s) {
  std::string out = s ? s : "";
  hk_string_free(s);
  return out;
}

struct Common {
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string format = "json";
  bool cross_check = false;
};

hk_format to_format(const std::string& f) {
  if (f == "csv") return HK_FORMAT_CSV;
  if (f == "table") return HK_FORMAT_TABLE;
  return HK_FORMAT_JSON;
}

struct Outcome {
  std::string text;
  int exit = kExitOk;
};

Context make_context(std::uint32_t prime, std::uint64_t budget) {
  hk_context* c = nullptr;
  check(hk_context_create(prime, budget, &c));
  return Context(c);
}

// Where the hypersurface equation comes from.
struct FormSpec {
  int d = 2;
  int N = 4;
  bool fermat = false;
  bool random = false;
  std::string poly;
  std::string poly_file;

  int sources() const {
    return int(fermat) + int(random) + int(!poly.empty()) + int(!poly_file.empty());
  }
  const char* source() const {
    if (random) return "random";
    if (fermat) return "fermat";
    return "explicit";
  }
};

void add_form_options(CLI::App* cmd, FormSpec& f) {
  cmd->add_option("--d", f.d, "dimension of the hypersurface (n = d+2 variables)")->required();
  cmd->add_option("--N", f.N, "degree of the form")->required();
  cmd->add_flag("--fermat", f.fermat, "use x0^N + ... + x{d+1}^N");
  cmd->add_flag("--random-smooth", f.random, "seeded random smooth form");
  cmd->add_option("--poly", f.poly, "explicit form, e.g. \"x0^3 + x1^3 + x2^3\"");
  cmd->add_option("--poly-file", f.poly_file, "file holding the form");
}

Poly make_form(const hk_context* ctx, const FormSpec& f, std::uint64_t seed) {
  if (f.sources() != 1)
    throw Failure{HK_ERR_INVALID_ARGUMENT,
                  "choose exactly one of --fermat, --random-smooth, --poly, --poly-file"};
  hk_polynomial* p = nullptr;
  if (f.fermat) {
    check(hk_polynomial_fermat(ctx, f.d + 2, f.N, &p));
  } else if (f.random) {
    check(hk_polynomial_random_smooth(ctx, f.d, f.N, seed, &p));
  } else {
    std::string text = f.poly;
    if (!f.poly_file.empty()) {
      std::ifstream in(f.poly_file);
      if (!in) throw Failure{HK_ERR_INVALID_ARGUMENT, "cannot read " + f.poly_file};
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    check(hk_polynomial_parse(ctx, text.c_str(), f.d + 2, &p));
  }
  Poly poly(p);
  return poly;
}

Ring make_ring(const hk_context* ctx, const hk_polynomial* f, int expect_degree) {
  hk_jacobian* r = nullptr;
  check(hk_jacobian_create(ctx, f, &r));
  Ring ring(r);
  int d = 0, N = 0;
  check(hk_jacobian_dimension(ring.get(), &d, &N));
  if (N != expect_degree)
    throw Failure{HK_ERR_DEGREE_MISMATCH, "form has degree " + std::to_string(N) + ", --N is " +
                                              std::to_string(expect_degree)};
  return ring;
}

hk_meta meta_for(const FormSpec& f, const Common& c) {
  return hk_meta{f.source(), c.seed, f.random ? 1 : 0};
}

// ---- subcommands -------------------------------------------------------

Outcome run_hodge(const Common& c, const FormSpec& f, std::uint32_t prime) {
  auto ctx = make_context(prime, c.budget);
  auto poly = make_form(ctx.get(), f, c.seed);
  auto ring = make_ring(ctx.get(), poly.get(), f.N);
  const hk_meta meta = meta_for(f, c);
  char* s = nullptr;
  check(hk_report_hodge(ring.get(), &meta, to_format(c.format), &s));
  int smooth = 0;
  check(hk_jacobian_is_smooth(ring.get(), &smooth));
  return {take(s), smooth ? kExitOk : kExitAssertion};
}

Outcome run_hilbert(const Common& c, const FormSpec& f, int k_max, std::uint32_t prime) {
  auto ctx = make_context(prime, c.budget);
  auto poly = make_form(ctx.get(), f, c.seed);
  auto ring = make_ring(ctx.get(), poly.get(), f.N);
  if (k_max < 0) {
    int sigma = 0;
    check(hk_jacobian_socle_degree(ring.get(), &sigma));
    k_max = sigma + 1 < 0 ? 0 : sigma + 1;
  }
  const hk_meta meta = meta_for(f, c);
  char* s = nullptr;
  check(hk_report_hilbert(ring.get(), k_max, &meta, to_format(c.format), &s));
  return {take(s), kExitOk};
}

struct GreenOpts {
  int n = 3;
  int N = 3;
  std::string codim = "0";
  int a_min = 0;
  int a_max = 6;
  int s_max = 2;
  int trials = 3;
};

// "2", "0..2" or "0,1,3"
std::vector<int> parse_codims(const std::string& text) {
  std::vector<int> out;
  try {
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
      const int lo = std::stoi(text.substr(0, dots));
      const int hi = std::stoi(text.substr(dots + 2));
      for (int c = lo; c <= hi; ++c) out.push_back(c);
    } else {
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    }
  } catch (const std::exception&) {
    throw Failure{HK_ERR_INVALID_ARGUMENT, "cannot read codimension list '" + text + "'"};
  }
  if (out.empty()) throw Failure{HK_ERR_INVALID_ARGUMENT, "empty codimension list"};
  return out;
}

Outcome run_green(const Common& c, const GreenOpts& g, std::uint32_t prime) {
  auto ctx = make_context(prime, c.budget);
  const auto codims = parse_codims(g.codim);
  hk_green_params p{g.n, g.N, codims.data(), codims.size(), g.a_min, g.a_max, g.s_max, g.trials,
                    c.seed};
  char* s = nullptr;
  std::size_t defects = 0, failures = 0;
  check(hk_report_green_scan(ctx.get(), &p, to_format(c.format), &s, &defects, &failures));
  if (failures) std::cerr << "warning: " << failures << " trial(s) without a certified base-point-free system\n";
  return {take(s), defects ? kExitAssertion : kExitOk};
}

struct KoszulOpts {
  std::string module = "S";
  int n = 3;
  int N = 3;
  std::size_t codim = 0;
  int a = 0;
  int p = 0;
  int s = 1;
  FormSpec form;
};

Outcome run_koszul(const Common& c, KoszulOpts k, std::uint32_t prime) {
  auto ctx = make_context(prime, c.budget);
  hk_subspace* w = nullptr;
  char* s = nullptr;
  int exact = 0;
  if (k.module == "S") {
    check(hk_subspace_random(ctx.get(), k.n, k.N, k.codim, c.seed, &w));
    Subspace ws(w);
    const hk_meta meta{"random", c.seed, 1};
    check(hk_report_koszul(ctx.get(), nullptr, ws.get(), k.a, k.s, &meta, to_format(c.format), &s,
                           &exact));
    const bool predicted = k.a >= k.s + static_cast<int>(k.codim);
    return {take(s), predicted && !exact ? kExitAssertion : kExitOk};
  }
  if (k.module != "R_f") throw Failure{HK_ERR_INVALID_ARGUMENT, "--module must be S or R_f"};
  k.form.N = k.N;
  auto poly = make_form(ctx.get(), k.form, c.seed);
  auto ring = make_ring(ctx.get(), poly.get(), k.N);
  hk_subspace* jn = nullptr;
  check(hk_subspace_jacobian_piece(ring.get(), k.N, &jn));
  Subspace jns(jn);
  check(hk_subspace_random_containing(ctx.get(), jns.get(), k.codim, c.seed, &w));
  Subspace ws(w);
  const hk_meta meta = meta_for(k.form, c);
  check(hk_report_koszul(ctx.get(), ring.get(), ws.get(), k.p, k.s, &meta, to_format(c.format), &s,
                         &exact));
  std::string text = take(s);
  const int d = k.form.d;
  const int a = -d - 2 + k.N * k.p;
  const bool predicted = a >= k.s + static_cast<int>(k.codim) && -d - 2 + k.N * (k.p + 1) >= k.N - 1;
  return {text, predicted && !exact ? kExitAssertion : kExitOk};
}

struct SweepOpts {
  int d = 0;
  std::optional<int> N, r, C, genus;
  bool abelian = false;
  bool find_threshold = false;
};

Outcome run_sweep(const Common& c, const SweepOpts& o) {
  char* s = nullptr;
  const hk_format fmt = to_format(c.format);
  if (o.abelian) {
    int all = 0;
    check(hk_report_sweep_abelian(o.d, fmt, &s, &all));
    return {take(s), all ? kExitOk : kExitAssertion};
  }
  if (o.genus) {
    if (o.find_threshold) {
      int matches = 0;
      check(hk_report_genus_threshold(o.d, *o.genus, fmt, &s, &matches));
      return {take(s), matches ? kExitOk : kExitAssertion};
    }
    if (!o.N) throw Failure{HK_ERR_INVALID_ARGUMENT, "--genus needs --N or --find-threshold"};
    check(hk_report_sweep_genus(o.d, *o.genus, *o.N, fmt, &s, nullptr));
    return {take(s), kExitOk};
  }
  if (!o.N || !o.r || !o.C)
    throw Failure{HK_ERR_INVALID_ARGUMENT, "give --N --r --C, or --abelian, or --genus"};
  check(hk_report_sweep(o.d, *o.N, *o.r, *o.C, fmt, &s, nullptr));
  return {take(s), kExitOk};
}

struct YukawaOpts {
  int d = 2;
  bool allow_large = false;
  bool k_equals_jacobian = false;
  bool fermat = false;
};

Outcome run_yukawa(const Common& c, const YukawaOpts& y, std::uint32_t prime) {
  if (y.d >= 3 && !y.allow_large)
    throw Failure{HK_ERR_SIZE_BUDGET,
                  "yukawa-chain with d = " + std::to_string(y.d) + " needs --allow-large"};
  auto ctx = make_context(prime, c.budget);
  FormSpec f;
  f.d = y.d;
  f.N = y.d + 2;
  f.fermat = y.fermat;
  f.random = !y.fermat;
  auto poly = make_form(ctx.get(), f, c.seed);
  auto ring = make_ring(ctx.get(), poly.get(), f.N);
  hk_subspace* jn = nullptr;
  check(hk_subspace_jacobian_piece(ring.get(), f.N, &jn));
  Subspace jns(jn);
  Subspace k;
  if (y.k_equals_jacobian) {
    k = std::move(jns);
  } else {
    hk_subspace* kp = nullptr;
    check(hk_subspace_random_containing(ctx.get(), jns.get(), 1, c.seed, &kp));
    k.reset(kp);
  }
  const hk_meta meta{f.source(), c.seed, 1};
  char* s = nullptr;
  int ok = 0;
  check(hk_report_yukawa_chain(ring.get(), k.get(), &meta, to_format(c.format), &s, &ok));
  return {take(s), ok ? kExitOk : kExitAssertion};
}

struct BpfOpts {
  int n = 3;
  int N = 2;
  std::size_t codim = 0;
  int m_max = 0;
};

Outcome run_bpf(const Common& c, const BpfOpts& b, std::uint32_t prime) {
  auto ctx = make_context(prime, c.budget);
  hk_subspace* w = nullptr;
  check(hk_subspace_random(ctx.get(), b.n, b.N, b.codim, c.seed, &w));
  Subspace ws(w);
  const hk_meta meta{"random", c.seed, 1};
  char* s = nullptr;
  int verified = 0;
  check(hk_report_bpf(ctx.get(), ws.get(), b.m_max, &meta, to_format(c.format), &s, &verified));
  return {take(s), verified ? kExitOk : kExitAssertion};
}

// ---- cross-check --------------------------------------------------------

// Fields that legitimately depend on the prime.
bool prime_dependent(const std::string& key) { return key == "prime" || key == "polynomial"; }

void diff(const nlohmann::ordered_json& a, const nlohmann::ordered_json& b, const std::string& path,
          std::vector<std::string>& out) {
  if (a.is_object() && b.is_object()) {
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (prime_dependent(it.key())) continue;
      if (!b.contains(it.key())) {
        out.push_back(path + "/" + it.key());
        continue;
      }
      diff(it.value(), b.at(it.key()), path + "/" + it.key(), out);
    }
    for (auto it = b.begin(); it != b.end(); ++it)
      if (!prime_dependent(it.key()) && !a.contains(it.key())) out.push_back(path + "/" + it.key());
    return;
  }
  if (a.is_array() && b.is_array() && a.size() == b.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) diff(a[i], b[i], path + "/" + std::to_string(i), out);
    return;
  }
  if (a != b) out.push_back(path.empty() ? "/" : path);
}

template <class Run>
Outcome with_cross_check(const Common& c, Run&& run) {
  if (!c.cross_check) return run(c.prime);
  if (c.format != "json")
    throw Failure{HK_ERR_INVALID_ARGUMENT, "--cross-check produces JSON; drop --format"};
  const std::uint32_t other =
      c.prime == hk_cross_check_prime() ? hk_default_prime() : hk_cross_check_prime();
  const Outcome first = run(c.prime);
  const Outcome second = run(other);
  const auto ja = nlohmann::ordered_json::parse(first.text);
  const auto jb = nlohmann::ordered_json::parse(second.text);
  std::vector<std::string> mismatches;
  diff(ja, jb, "", mismatches);
  if (first.exit != second.exit) mismatches.push_back("exit_code");
  nlohmann::ordered_json out;
  out["schema"] = "hodgekit.cross-check/1";
  out["primes"] = {c.prime, other};
  out["agree"] = mismatches.empty();
  out["mismatches"] = mismatches;
  out["primary"] = ja;
  out["secondary"] = jb;
  int code = first.exit;
  if (!mismatches.empty() && code == kExitOk) code = kExitAssertion;
  return {out.dump(2) + "\n", code};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Jacobian-ring, Koszul and Hodge-theoretic computations over GF(p)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(hk_version()));

  Common common;
  common.prime = hk_default_prime();
  app.add_option("--prime", common.prime, "prime modulus below 2^31")
      ->envname("HODGEKIT_PRIME");
  app.add_option("--seed", common.seed, "64-bit seed for every random choice");
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--budget", common.budget, "limit on stored matrix entries (0 = default)")
      ->envname("HODGEKIT_BUDGET");
  app.add_flag("--cross-check", common.cross_check,
               "repeat at a second prime and compare all dimensions");

  FormSpec hodge_form;
  auto* hodge = app.add_subcommand("hodge-numbers", "Hilbert function and primitive Hodge numbers");
  add_form_options(hodge, hodge_form);

  FormSpec hilbert_form;
  int k_max = -1;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the Jacobian ring");
  add_form_options(hilbert, hilbert_form);
  hilbert->add_option("--kmax", k_max, "largest degree (default sigma+1)");

  GreenOpts green_opts;
  auto* green = app.add_subcommand("green-scan", "Koszul exactness scan over random systems");
  green->add_option("--n", green_opts.n, "number of variables")->required();
  green->add_option("--N", green_opts.N, "degree of the linear system")->required();
  green->add_option("--codim", green_opts.codim, "codimensions: c, lo..hi or a,b,c");
  green->add_option("--amin", green_opts.a_min, "smallest a");
  green->add_option("--amax", green_opts.a_max, "largest a");
  green->add_option("--smax", green_opts.s_max, "largest s");
  green->add_option("--trials", green_opts.trials, "random systems per codimension");

  KoszulOpts koszul_opts;
  auto* koszul = app.add_subcommand("koszul-check", "middle exactness of one Koszul slice");
  koszul->add_option("--module", koszul_opts.module, "S or R_f")
      ->check(CLI::IsMember({"S", "R_f"}));
  koszul->add_option("--n", koszul_opts.n, "number of variables (module S)");
  koszul->add_option("--N", koszul_opts.N, "degree of W")->required();
  koszul->add_option("--codim", koszul_opts.codim, "codimension of W");
  koszul->add_option("--a", koszul_opts.a, "left degree (module S)");
  koszul->add_option("--p", koszul_opts.p, "Hodge index, a = -d-2+Np (module R_f)");
  koszul->add_option("--s", koszul_opts.s, "exterior index");
  koszul->add_option("--d", koszul_opts.form.d, "hypersurface dimension (module R_f)");
  koszul->add_flag("--fermat", koszul_opts.form.fermat, "Fermat form (module R_f)");
  koszul->add_flag("--random-smooth", koszul_opts.form.random, "random smooth form (module R_f)");
  koszul->add_option("--poly", koszul_opts.form.poly, "explicit form (module R_f)");

  SweepOpts sweep_opts;
  int sweep_N = 0, sweep_r = 0, sweep_C = 0, sweep_g = 0;
  auto* sweep = app.add_subcommand("sweep", "sweeping-out degree criteria");
  sweep->add_option("--d", sweep_opts.d, "dimension of the hypersurface")->required();
  auto* opt_N = sweep->add_option("--N", sweep_N, "degree");
  auto* opt_r = sweep->add_option("--r", sweep_r, "dimension of the sweeping varieties");
  auto* opt_C = sweep->add_option("--C", sweep_C, "dimension of their moduli");
  sweep->add_flag("--abelian", sweep_opts.abelian, "abelian varieties on Calabi-Yau hypersurfaces");
  auto* opt_g = sweep->add_option("--genus", sweep_g, "curves of genus g (r = 1)");
  sweep->add_flag("--find-threshold", sweep_opts.find_threshold, "least passing degree for --genus");

  YukawaOpts yukawa_opts;
  auto* yukawa = app.add_subcommand("yukawa-chain", "hyperplane chain for Calabi-Yau hypersurfaces");
  yukawa->add_option("--d", yukawa_opts.d, "dimension (N = d+2)");
  yukawa->add_flag("--allow-large", yukawa_opts.allow_large, "permit d >= 3");
  yukawa->add_flag("--k-equals-jacobian", yukawa_opts.k_equals_jacobian,
                   "use K = J_f^N (degenerate input)");
  yukawa->add_flag("--fermat", yukawa_opts.fermat, "Fermat form instead of a random smooth one");

  BpfOpts bpf_opts;
  auto* bpf = app.add_subcommand("bpf-check", "certify a random linear system base-point free");
  bpf->add_option("--n", bpf_opts.n, "number of variables")->required();
  bpf->add_option("--N", bpf_opts.N, "degree")->required();
  bpf->add_option("--codim", bpf_opts.codim, "codimension");
  bpf->add_option("--mmax", bpf_opts.m_max, "largest degree tried (default n(N-1)+1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Outcome result;
    if (hodge->parsed()) {
      result = with_cross_check(common, [&](std::uint32_t p) { return run_hodge(common, hodge_form, p); });
    } else if (hilbert->parsed()) {
      result = with_cross_check(
          common, [&](std::uint32_t p) { return run_hilbert(common, hilbert_form, k_max, p); });
    } else if (green->parsed()) {
      result = with_cross_check(common, [&](std::uint32_t p) { return run_green(common, green_opts, p); });
    } else if (koszul->parsed()) {
      result =
          with_cross_check(common, [&](std::uint32_t p) { return run_koszul(common, koszul_opts, p); });
    } else if (sweep->parsed()) {
      if (*opt_N) sweep_opts.N = sweep_N;
      if (*opt_r) sweep_opts.r = sweep_r;
      if (*opt_C) sweep_opts.C = sweep_C;
      if (*opt_g) sweep_opts.genus = sweep_g;
      result = with_cross_check(common, [&](std::uint32_t) { return run_sweep(common, sweep_opts); });
    } else if (yukawa->parsed()) {
      result =
          with_cross_check(common, [&](std::uint32_t p) { return run_yukawa(common, yukawa_opts, p); });
    } else {
      result = with_cross_check(common, [&](std::uint32_t p) { return run_bpf(common, bpf_opts, p); });
    }
    std::cout << result.text;
    return result.exit;
  } catch (const Failure& f) {
    std::cerr << "error: " << hk_status_string(f.status);
    if (!f.message.empty()) std::cerr << ": " << f.message;
    std::cerr << "\n";
    return exit_code(f.status);
  }
}
