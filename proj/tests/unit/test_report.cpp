#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "core/error.hpp"
#include "report/report.hpp"

using namespace hodgekit;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("format names") {
  CHECK(report::parse_format("json") == report::Format::Json);
  CHECK(report::parse_format("csv") == report::Format::Csv);
  CHECK(report::parse_format("table") == report::Format::Table);
  CHECK_THROWS_AS(report::parse_format("xml"), Error);
}

TEST_CASE("csv quoting and table alignment") {
  report::Table t{{"a", "b"}, {{"1", "x,y"}, {"22", "say \"hi\""}}};
  const auto csv = lines(report::render(t, report::Format::Csv));
  REQUIRE(csv.size() == 3);
  CHECK(csv[0] == "a,b");
  CHECK(csv[1] == "1,\"x,y\"");
  CHECK(csv[2] == "22,\"say \"\"hi\"\"\"");
  const auto txt = lines(report::render(t, report::Format::Table));
  REQUIRE(txt.size() == 4);
  CHECK(txt[0].size() == txt[2].size());
}

TEST_CASE("hodge report") {
  ComputeContext ctx(65521);
  JacobianRing ring(Hypersurface(Polynomial::fermat(4, 4, ctx.field)), ctx);
  report::RunMeta meta{65521, std::nullopt, "fermat"};
  const auto j = json::parse(report::hodge(ring, meta, report::Format::Json));
  CHECK(j["schema"] == "hodgekit.hodge/1");
  CHECK(j["prime"] == 65521);
  CHECK(j["seed"].is_null());
  CHECK(j["sigma"] == 8);
  CHECK(j["smooth"] == true);
  CHECK(j["hilbert"].size() == 10);
  CHECK(j["hodge"][1][2] == 19);
  CHECK(j["hodge_level"] == 2);
  const auto csv = lines(report::hodge(ring, meta, report::Format::Csv));
  CHECK(csv[0] == "quantity,k,p,q,value");
}

TEST_CASE("hodge report of a singular form") {
  ComputeContext ctx(65521);
  JacobianRing ring(Hypersurface(parse_polynomial("x0^3 + x1^3", 3, ctx.field)), ctx);
  const auto j = json::parse(report::hodge(ring, {65521, 4, "poly"}, report::Format::Json));
  CHECK(j["smooth"] == false);
  CHECK(j["hodge"].is_null());
  CHECK(j["reason"].is_string());
  CHECK(j["seed"] == 4);
}

TEST_CASE("sweep and threshold reports") {
  const auto rows = abelian_sweep_table(3);
  const auto j = json::parse(report::sweep(rows, report::Format::Json));
  CHECK(j["schema"] == "hodgekit.sweep/1");
  CHECK(j["rows"].size() == 3);
  const auto csv = lines(report::sweep(rows, report::Format::Csv));
  CHECK(csv[0] == "d,N,r,C,gamma,ineq1_slack,ineq2_slack,pass,degree_hypothesis");
  CHECK(csv.size() == 4);
  const auto t = json::parse(report::threshold({{3, 2, 3, 10, 10}}, report::Format::Json));
  CHECK(t["schema"] == "hodgekit.threshold/1");
}

TEST_CASE("bpf report") {
  ComputeContext ctx(65521);
  report::BpfRun run{3, 2, 0, 4, BpfStatus{2}};
  const auto j = json::parse(report::bpf(run, {65521, 1, "random"}, report::Format::Json));
  CHECK(j["schema"] == "hodgekit.bpf/1");
}
