#include "report/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"
#include "jacobian/hodge.hpp"

namespace hodgekit::report {

namespace {

using Json = nlohmann::ordered_json;

std::string schema(const char* kind) {
  return std::string("hodgekit.") + kind + "/" + std::to_string(kSchemaVersion);
}

Json header(const char* kind, const RunMeta& meta) {
  Json j;
  j["schema"] = schema(kind);
  j["prime"] = meta.prime;
  j["seed"] = meta.seed ? Json(*meta.seed) : Json(nullptr);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string str(bool b) { return b ? "true" : "false"; }

template <class T>
std::string str(const T& v) {
  return std::to_string(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::uint64_t> hilbert_values(const JacobianRing& ring, int k_max) {
  std::vector<std::uint64_t> h;
  for (int k = 0; k <= k_max; ++k) h.push_back(ring.hilbert(k));
  return h;
}

Json hodge_json_entries(const HodgeVector& h) {
  Json arr = Json::array();
  for (const auto& e : h.entries) arr.push_back(Json::array({e.p, e.q, e.h}));
  return arr;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  fail(ErrorCode::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string render(const Table& table, Format format) {
  require(format != Format::Json, ErrorCode::InvalidArgument, "tables render as csv or text");
  std::ostringstream out;
  if (format == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\n";
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
    return out.str();
  }
  std::vector<std::size_t> width(table.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  measure(table.header);
  for (const auto& r : table.rows) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text += "  ";
      text += std::string(width[i] - cells[i].size(), ' ') + cells[i];
    }
    out << text << "\n";
  };
  line(table.header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << "\n";
  for (const auto& r : table.rows) line(r);
  return out.str();
}

std::string hodge(const JacobianRing& ring, const RunMeta& meta, Format format) {
  const auto& cert = ring.smoothness();
  const int sigma = ring.socle_degree();
  const auto h = hilbert_values(ring, std::max(sigma + 1, 0));
  std::optional<HodgeVector> hv;
  if (cert.smooth) hv = hodge_numbers_prim(ring);
  if (format == Format::Json) {
    Json j = header("hodge", meta);
    j["source"] = meta.source;
    j["polynomial"] = ring.hypersurface().polynomial().to_string();
    j["d"] = ring.dimension();
    j["N"] = ring.degree();
    j["sigma"] = sigma;
    j["smooth"] = cert.smooth;
    if (!cert.smooth) j["reason"] = cert.reason;
    j["hilbert"] = h;
    j["hodge"] = hv ? hodge_json_entries(*hv) : Json(nullptr);
    if (hv) {
      try {
        j["hodge_level"] = hodge_level(*hv);
      } catch (const Error&) {
        j["hodge_level"] = nullptr;
      }
    }
    return dump(j);
  }
  Table t{{"quantity", "k", "p", "q", "value"}, {}};
  t.rows.push_back({"sigma", "", "", "", str(sigma)});
  t.rows.push_back({"smooth", "", "", "", str(cert.smooth)});
  for (std::size_t k = 0; k < h.size(); ++k) t.rows.push_back({"hilbert", str(k), "", "", str(h[k])});
  if (hv)
    for (const auto& e : hv->entries)
      t.rows.push_back({"hodge", str(residue_degree(ring.dimension(), ring.degree(), e.q)), str(e.p),
                        str(e.q), str(e.h)});
  return render(t, format);
}

std::string hilbert(const JacobianRing& ring, int k_max, const RunMeta& meta, Format format) {
  require(k_max >= 0, ErrorCode::InvalidArgument, "k_max must be >= 0");
  const auto h = hilbert_values(ring, k_max);
  if (format == Format::Json) {
    Json j = header("hilbert", meta);
    j["source"] = meta.source;
    j["polynomial"] = ring.hypersurface().polynomial().to_string();
    j["d"] = ring.dimension();
    j["N"] = ring.degree();
    j["sigma"] = ring.socle_degree();
    j["smooth"] = ring.is_smooth();
    j["hilbert"] = h;
    return dump(j);
  }
  Table t{{"k", "dim"}, {}};
  for (std::size_t k = 0; k < h.size(); ++k) t.rows.push_back({str(k), str(h[k])});
  return render(t, format);
}

std::string green_scan(const GreenScanResult& result, const RunMeta& meta, Format format) {
  const auto& p = result.params;
  if (format == Format::Json) {
    Json j = header("green-scan", meta);
    j["n"] = p.n;
    j["N"] = p.N;
    j["codims"] = p.codims;
    j["a_min"] = p.a_min;
    j["a_max"] = p.a_max;
    j["s_max"] = p.s_max;
    j["trials"] = p.trials;
    Json cells = Json::array();
    for (const auto& c : result.cells) {
      Json cell;
      cell["codim"] = c.codim;
      cell["trial"] = c.trial;
      cell["a"] = c.a;
      cell["s"] = c.s;
      cell["bound_holds"] = c.bound_holds;
      cell["bpf_degree"] = c.report ? Json(c.bpf_degree) : Json(nullptr);
      if (c.report) {
        cell["rank_in"] = c.report->rank_in;
        cell["kernel_out"] = c.report->kernel_out;
        cell["defect"] = c.report->defect;
        cell["exact"] = c.report->exact;
      } else {
        cell["rank_in"] = cell["kernel_out"] = cell["defect"] = nullptr;
        cell["exact"] = "sampling_failed";
      }
      cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    j["in_bound_defects"] = result.in_bound_defects;
    j["sampling_failures"] = result.sampling_failures;
    return dump(j);
  }
  Table t{{"n", "N", "codim", "trial", "a", "s", "rank_in", "kernel_out", "defect", "bound_holds",
           "exact"},
          {}};
  for (const auto& c : result.cells) {
    std::vector<std::string> row{str(c.n), str(c.N), str(c.codim), str(c.trial), str(c.a), str(c.s)};
    if (c.report) {
      row.insert(row.end(), {str(c.report->rank_in), str(c.report->kernel_out),
                             str(c.report->defect), str(c.bound_holds), str(c.report->exact)});
    } else {
      row.insert(row.end(), {"", "", "", str(c.bound_holds), "sampling_failed"});
    }
    t.rows.push_back(std::move(row));
  }
  return render(t, format);
}

std::string koszul(const KoszulCheck& check, const RunMeta& meta, Format format) {
  const auto& r = check.report;
  if (format == Format::Json) {
    Json j = header("koszul", meta);
    j["module"] = r.module;
    j["n"] = check.n;
    j["N"] = check.N;
    j["codim_w"] = check.codim_w;
    j["w"] = r.w;
    j["a"] = r.a;
    j["s"] = r.s;
    j["in"] = {{"rows", r.in_rows}, {"cols", r.in_cols}, {"rank", r.rank_in}};
    j["out"] = {{"rows", r.out_rows}, {"cols", r.out_cols}, {"kernel", r.kernel_out}};
    j["defect"] = r.defect;
    j["exact"] = r.exact;
    j["green_bound"] = r.a >= r.s + static_cast<int>(check.codim_w);
    if (check.jacobian) {
      j["p"] = check.jacobian->p;
      j["transfer_bound"] = check.jacobian->transfer_bound;
    }
    return dump(j);
  }
  Table t{{"module", "a", "s", "w", "rank_in", "kernel_out", "defect", "exact"}, {}};
  t.rows.push_back({r.module, str(r.a), str(r.s), str(r.w), str(r.rank_in), str(r.kernel_out),
                    str(r.defect), str(r.exact)});
  return render(t, format);
}

std::string sweep(const std::vector<CriterionReport>& rows, Format format) {
  if (format == Format::Json) {
    Json j;
    j["schema"] = schema("sweep");
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["d"] = r.input.d;
      row["N"] = r.input.N;
      row["r"] = r.input.r;
      row["C"] = r.input.C;
      row["gamma"] = r.gamma;
      row["ineq1_slack"] = r.ineq1_slack;
      row["ineq2_slack"] = r.ineq2_slack;
      row["pass"] = r.pass;
      row["degree_hypothesis"] = r.degree_hypothesis;
      Json per = Json::array();
      for (const auto& e : r.per_i) per.push_back({{"i", e.i}, {"gamma_i", e.gamma_i}, {"slack", e.slack}});
      row["per_i"] = std::move(per);
      arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return dump(j);
  }
  Table t{{"d", "N", "r", "C", "gamma", "ineq1_slack", "ineq2_slack", "pass", "degree_hypothesis"},
          {}};
  for (const auto& r : rows)
    t.rows.push_back({str(r.input.d), str(r.input.N), str(r.input.r), str(r.input.C), str(r.gamma),
                      str(r.ineq1_slack), str(r.ineq2_slack), str(r.pass),
                      str(r.degree_hypothesis)});
  return render(t, format);
}

std::string threshold(const std::vector<ThresholdRow>& rows, Format format) {
  if (format == Format::Json) {
    Json j;
    j["schema"] = schema("threshold");
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"d", r.d},
                     {"g", r.g},
                     {"C", r.C},
                     {"N_min", r.n_min},
                     {"closed_form", r.closed_form},
                     {"matches", r.n_min == r.closed_form}});
    j["rows"] = std::move(arr);
    return dump(j);
  }
  Table t{{"d", "g", "C", "N_min", "closed_form", "matches"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({str(r.d), str(r.g), str(r.C), str(r.n_min), str(r.closed_form),
                      str(r.n_min == r.closed_form)});
  return render(t, format);
}

std::string yukawa(const YukawaChainReport& chain, const JacobianRing& ring, const RunMeta& meta,
                   Format format) {
  if (format == Format::Json) {
    Json j = header("yukawa-chain", meta);
    j["source"] = meta.source;
    j["polynomial"] = ring.hypersurface().polynomial().to_string();
    j["d"] = chain.d;
    j["N"] = chain.N;
    j["sigma"] = chain.sigma;
    Json steps = Json::array();
    for (const auto& s : chain.steps)
      steps.push_back({{"step", s.step}, {"expected", s.expected}, {"got", s.got}, {"ok", s.ok}});
    j["steps"] = std::move(steps);
    j["socle_image_nonzero"] = chain.socle_image_nonzero;
    j["all_ok"] = chain.all_ok();
    return dump(j);
  }
  Table t{{"step", "expected", "got", "ok"}, {}};
  for (const auto& s : chain.steps) t.rows.push_back({s.step, s.expected, str(s.got), str(s.ok)});
  return render(t, format);
}

std::string bpf(const BpfRun& run, const RunMeta& meta, Format format) {
  const bool ok = run.status.verified();
  if (format == Format::Json) {
    Json j = header("bpf", meta);
    j["n"] = run.n;
    j["N"] = run.N;
    j["codim"] = run.codim;
    j["m_max"] = run.m_max;
    j["verified"] = ok;
    j["degree"] = ok ? Json(*run.status.verified_degree) : Json(nullptr);
    return dump(j);
  }
  Table t{{"n", "N", "codim", "m_max", "verified", "degree"}, {}};
  t.rows.push_back({str(run.n), str(run.N), str(run.codim), str(run.m_max), str(ok),
                    ok ? str(*run.status.verified_degree) : ""});
  return render(t, format);
}

}  // namespace hodgekit::report
