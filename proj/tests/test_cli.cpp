#include <doctest.h>

#include <filesystem>

#include "dlarg/cli.hpp"
#include "dlarg/error.hpp"

using namespace dlarg;
namespace fs = std::filesystem;

namespace {
RunConfig config(const std::string& cmd, const char* dir) {
  RunConfig c;
  c.command = cmd;
  c.cache_dir = fs::temp_directory_path() / dir;
  return c;
}
}  // namespace

TEST_CASE("zeros for q = 3") {
  fs::remove_all(fs::temp_directory_path() / "dlarg-cli-zeros");
  RunConfig c = config("zeros", "dlarg-cli-zeros");
  c.qs = {3};
  c.height = 10.0;
  const RunResult a = run(c);
  const Table& t = a.report.find("zeros");
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][3].get<std::size_t>() == 2);  // +-8.0397
  CHECK(a.exit_code == 0);
  // warm rerun gives the same text
  CHECK(run(c).report.to_csv() == a.report.to_csv());
}

TEST_CASE("bad moduli are reported per item") {
  RunConfig c = config("zeros", "dlarg-cli-bad");
  c.qs = {4, 5};
  c.height = 2.0;
  const RunResult r = run(c);
  CHECK(r.exit_code == 2);
  const Table& e = r.report.find("errors");
  REQUIRE(e.rows.size() == 1);
  CHECK(e.rows[0][1].get<std::string>().find("q=4") != std::string::npos);
  CHECK(r.report.find("zeros").rows.size() == 3);
}

TEST_CASE("csv and json carry the same numbers") {
  RunConfig c = config("bounds", "dlarg-cli-unused");
  c.bound = "cor2";
  c.betas = {0.3, 0.5};
  const Report r = run(c).report;
  const std::string csv = r.to_csv();
  const Json j = Json::parse(r.to_json());
  const auto& rows = j["tables"]["values"];
  REQUIRE(rows.size() == 2);
  for (const auto& row : rows) CHECK(csv.find(csv_cell(row["value"])) != std::string::npos);
  CHECK(j["config"]["beta"][1].get<double>() == 0.5);
}

TEST_CASE("report table") {
  RunConfig c = config("report", "dlarg-cli-unused");
  c.betas = {0.2, 0.5, 1.0};
  const Report r = run(c).report;
  const Table& b = r.find("bounds");
  CHECK(b.rows[0][1].is_null());  // cor2 undefined at beta <= 1/4
  CHECK(b.rows[1][1].get<double>() > 0.10);
  const Table& x = r.find("crossings");
  CHECK(x.rows[0][4].get<double>() == doctest::Approx(0.55).epsilon(0.03));
}

TEST_CASE("stats report for a small modulus") {
  RunConfig c = config("stats", "dlarg-cli-stats");
  c.qs = {13};
  const RunResult r = run(c);
  CHECK(r.exit_code == 0);
  const Table& t = r.report.find("ensemble");
  CHECK(t.rows.size() == 3);
  for (const auto& row : t.rows) CHECK(row[14].get<bool>());
}

TEST_CASE("crossings and errors") {
  RunConfig c = config("crossings", "dlarg-cli-unused");
  c.pair = "hr,zero";
  CHECK(run(c).report.find("crossings").rows[0][4].get<double>() == doctest::Approx(0.633).epsilon(0.002));
  c.pair = "hr";
  CHECK_THROWS_AS(run(c), DomainError);
  c.command = "nope";
  CHECK_THROWS_AS(run(c), DomainError);
  CHECK(primes_in_range(10, 30) == std::vector<std::uint32_t>{11, 13, 17, 19, 23, 29});
}

TEST_CASE("extremal tables") {
  RunConfig c = config("extremal", "dlarg-cli-unused");
  c.delta = 1.0;
  c.h = 0.5;
  const Report r = run(c).report;
  for (const auto& row : r.find("values").rows) {
    CHECK(row[2].get<double>() >= row[1].get<double>() - 1e-12);
    CHECK(row[3].get<double>() <= row[1].get<double>() + 1e-12);
  }
}
