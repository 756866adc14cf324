// Command-line driver. Exit codes: 0 success, 2 invalid input, 3 numerical failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include "dlarg/cli.hpp"
#include "dlarg/error.hpp"

namespace {

std::vector<std::uint32_t> parse_range(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw dlarg::DomainError("--q-range expects lo:hi");
  return dlarg::primes_in_range(static_cast<std::uint32_t>(std::stoul(s.substr(0, colon))),
                                static_cast<std::uint32_t>(std::stoul(s.substr(colon + 1))));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirichlet L-function argument statistics and bounds"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  dlarg::RunConfig cfg;
  std::string q_range, output;
  double t = 0, t0 = 0, h = 0, delta = 0, height = 0;
  app.add_option("--q", cfg.qs, "Odd prime moduli")->delimiter(',');
  app.add_option("--q-range", q_range, "All primes in lo:hi");
  auto* ot = app.add_option("--t", t, "Height T (half length of [-T, T])");
  auto* ot0 = app.add_option("--t0", t0, "Centre of a shifted window");
  auto* oh = app.add_option("--h", h, "Half length of a shifted window");
  auto* od = app.add_option("--delta", delta, "Exponential type parameter");
  app.add_option("--beta", cfg.betas, "Beta values")->delimiter(',');
  auto* oheight = app.add_option("--height", height, "Zero height");
  app.add_option("--out", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "Write to this file instead of stdout");
  app.add_option("--cache-dir", cfg.cache_dir, "Zero cache directory");
  app.add_option("--delta-cap", cfg.delta_cap, "Largest delta for prime sums");
  app.add_option("--tolerance", cfg.tolerance, "Zero refinement tolerance");
  app.add_option("--bound", cfg.bound, "thm1, thm2, cor2, hr, zhao or shifted");
  app.add_option("--pair", cfg.pair, "Two bound ids, f,g");
  app.add_option("--lo", cfg.lo, "Crossing search lower end");
  app.add_option("--hi", cfg.hi, "Crossing search upper end");

  const std::pair<const char*, const char*> commands[] = {
      {"zeros", "Compute or load low-lying zeros"},
      {"stats", "Ensemble mean and mean square of S against the bounds"},
      {"explicit-check", "Explicit formula residuals"},
      {"bounds", "Evaluate one bound over a beta grid"},
      {"crossings", "Crossing of two bound curves"},
      {"extremal", "Extremal majorant and minorant diagnostics"},
      {"proportion", "Proportion of zeros bounds"},
      {"report", "Full table of bounds and constants"},
  };
  for (const auto& [name, desc] : commands) app.add_subcommand(name, desc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!q_range.empty()) {
      auto more = parse_range(q_range);
      cfg.qs.insert(cfg.qs.end(), more.begin(), more.end());
    }
    if (*ot) cfg.T = t;
    if (*ot0) cfg.T0 = t0;
    if (*oh) cfg.h = h;
    if (*od) cfg.delta = delta;
    if (*oheight) cfg.height = height;

    const dlarg::RunResult res = dlarg::run(cfg);
    const std::string text = res.report.render(cfg.format);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      out << text;
      if (!out) throw dlarg::DomainError("cannot write " + output);
    }
    return res.exit_code;
  } catch (const dlarg::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dlarg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
