#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "criteria/criteria.hpp"
#include "jacobian/jacobian_ring.hpp"
#include "koszul/koszul.hpp"
#include "yukawa/yukawa.hpp"

namespace hodgekit::report {

inline constexpr int kSchemaVersion = 1;

enum class Format { Json, Csv, Table };

/// "json", "csv" or "table"; throws InvalidArgument otherwise.
Format parse_format(std::string_view name);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// CSV or aligned text; Json is rejected.
std::string render(const Table& table, Format format);

/// Provenance printed with every report.
struct RunMeta {
  std::uint32_t prime = 0;
  std::optional<std::uint64_t> seed;
  /// "fermat", "random" or "explicit" where a form is involved
  std::string source;
};

std::string hodge(const JacobianRing& ring, const RunMeta& meta, Format format);
std::string hilbert(const JacobianRing& ring, int k_max, const RunMeta& meta, Format format);
std::string green_scan(const GreenScanResult& result, const RunMeta& meta, Format format);

struct KoszulCheck {
  int n = 0;
  int N = 0;
  std::size_t codim_w = 0;
  KoszulReport report;
  /// present for R_f checks
  std::optional<JacobianKoszulReport> jacobian;
};
std::string koszul(const KoszulCheck& check, const RunMeta& meta, Format format);

struct ThresholdRow {
  int d = 0;
  int g = 0;
  int C = 0;
  int n_min = 0;
  int closed_form = 0;
};
std::string sweep(const std::vector<CriterionReport>& rows, Format format);
std::string threshold(const std::vector<ThresholdRow>& rows, Format format);

std::string yukawa(const YukawaChainReport& chain, const JacobianRing& ring, const RunMeta& meta,
                   Format format);

struct BpfRun {
  int n = 0;
  int N = 0;
  std::size_t codim = 0;
  int m_max = 0;
  BpfStatus status;
};
std::string bpf(const BpfRun& run, const RunMeta& meta, Format format);

}  // namespace hodgekit::report
