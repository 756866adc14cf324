#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dlarg/report.hpp"

namespace dlarg {

struct RunConfig {
  std::string command;
  std::vector<std::uint32_t> qs;
  std::optional<double> T;
  std::optional<double> T0;
  std::optional<double> h;
  std::optional<double> delta;
  std::vector<double> betas;
  std::optional<double> height;
  std::filesystem::path cache_dir = "dlarg-cache";
  std::string format = "csv";
  double delta_cap = 1.6;
  double tolerance = 1e-9;
  std::string bound;                 // bounds: thm1, thm2, cor2, hr, zhao, shifted
  std::string pair = "zhao,cor2";    // crossings
  double lo = 0.51, hi = 0.9;        // crossings search interval

  Json echo() const;
};

struct RunResult {
  Report report;
  int exit_code = 0;  // 0 ok, 3 numerical consistency failure
};

// Every odd prime in [lo, hi].
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

RunResult run_zeros(const RunConfig& cfg);
RunResult run_stats(const RunConfig& cfg);
RunResult run_report(const RunConfig& cfg);
RunResult run_explicit_check(const RunConfig& cfg);
RunResult run_extremal(const RunConfig& cfg);
RunResult run_proportion(const RunConfig& cfg);
RunResult run_bounds(const RunConfig& cfg);
RunResult run_crossings(const RunConfig& cfg);

// Dispatch on cfg.command.
RunResult run(const RunConfig& cfg);

}  // namespace dlarg
