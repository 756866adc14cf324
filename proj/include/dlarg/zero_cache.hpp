#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <vector>

#include "dlarg/lfunc.hpp"

namespace dlarg {

// Zeros of every non-principal L(s, chi) mod q with |gamma| < height.
struct ZeroSet {
  std::uint32_t q = 0;
  std::uint32_t g = 0;
  double height = 0.0;
  std::vector<std::vector<ZeroRecord>> by_char;  // indexed by j, sorted by gamma
  std::vector<char> central_flag;
};

// Plain-text cache, one file per modulus:
//   # coverage q=<q> g=<g> height=<%.17g>
//   q=<q> g=<g> j=<j> gamma=<%.12g> abs_tolerance=<%.3g>
// Gammas are rounded through the printed form on insertion, so a freshly computed
// set and a reloaded one compare equal. One writer per directory.
class ZeroCache {
 public:
  // Empty directory: memory only.
  explicit ZeroCache(std::filesystem::path dir = {});

  // Coverage at least `height`, computing and persisting what is missing.
  const ZeroSet& ensure(std::uint32_t q, double height);
  // Every character has at least one zero on record (coverage grown geometrically).
  const ZeroSet& ensure_lowest(std::uint32_t q, double start_height);
  // Lookup without computing; CacheMissError naming (q, j, height) if not covered.
  const ZeroSet& require(std::uint32_t q, double height) const;

  double coverage(std::uint32_t q) const;
  std::filesystem::path file_for(std::uint32_t q) const;
  std::size_t computations() const { return computations_; }

 private:
  bool load(std::uint32_t q);
  void save(const ZeroSet& set) const;

  std::filesystem::path dir_;
  std::map<std::uint32_t, ZeroSet> sets_;
  std::size_t computations_ = 0;
  mutable std::mutex mutex_;
};

// Round-trip helpers, exposed for tests.
double round_gamma(double gamma);
std::vector<ZeroRecord> parse_zero_lines(const std::string& text, double* height);

}  // namespace dlarg
