#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dlarg/error.hpp"
#include "dlarg/zero_cache.hpp"

using namespace dlarg;
namespace fs = std::filesystem;

namespace {
fs::path fresh_dir(const char* name) {
  const fs::path d = fs::temp_directory_path() / name;
  fs::remove_all(d);
  return d;
}
}  // namespace

TEST_CASE("write then read gives the same zeros") {
  const fs::path dir = fresh_dir("dlarg-cache-roundtrip");
  std::vector<std::vector<ZeroRecord>> first;
  {
    ZeroCache c(dir);
    first = c.ensure(7, 12.0).by_char;
    CHECK(c.computations() == 1);
  }
  ZeroCache c(dir);
  const ZeroSet& s = c.require(7, 12.0);
  REQUIRE(s.by_char.size() == first.size());
  for (std::size_t j = 0; j < first.size(); ++j) {
    REQUIRE(s.by_char[j].size() == first[j].size());
    for (std::size_t k = 0; k < first[j].size(); ++k)
      CHECK(s.by_char[j][k].gamma == first[j][k].gamma);
  }
  c.ensure(7, 12.0);
  CHECK(c.computations() == 0);
}

TEST_CASE("extension only adds the new windows") {
  ZeroCache c;
  const auto low = c.ensure(5, 8.0).by_char;
  const ZeroSet& high = c.ensure(5, 16.0);
  for (std::size_t j = 1; j < low.size(); ++j) {
    std::size_t inside = 0;
    for (const auto& z : high.by_char[j]) inside += std::abs(z.gamma) < 8.0;
    CHECK(inside == low[j].size());
    for (std::size_t k = 1; k < high.by_char[j].size(); ++k)
      CHECK(high.by_char[j][k - 1].gamma < high.by_char[j][k].gamma);
  }
}

TEST_CASE("missing coverage names what is missing") {
  ZeroCache c;
  try {
    c.require(11, 5.0);
    FAIL("expected a cache miss");
  } catch (const CacheMissError& e) {
    CHECK(std::string(e.what()).find("q=11") != std::string::npos);
  }
}

TEST_CASE("line format") {
  const std::string text =
      "# coverage q=5 g=2 height=10\n"
      "q=5 g=2 j=1 gamma=6.64845334472 abs_tolerance=1e-09\n";
  double h = 0;
  const auto recs = parse_zero_lines(text, &h);
  REQUIRE(recs.size() == 1);
  CHECK(h == 10.0);
  CHECK(recs[0].j == 1);
  CHECK(recs[0].gamma == 6.64845334472);
  CHECK(round_gamma(1.0 / 3.0) == 0.333333333333);
}
