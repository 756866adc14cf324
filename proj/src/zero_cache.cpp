#include "dlarg/zero_cache.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "dlarg/error.hpp"

namespace dlarg {

namespace {

std::string format_record(const ZeroRecord& z) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "q=%u g=%u j=%u gamma=%.12g abs_tolerance=%.3g", z.q, z.g, z.j,
                z.gamma, z.abs_tolerance);
  return buf;
}

bool read_field(const std::string& token, const char* key, std::string& value) {
  const std::string prefix = std::string(key) + "=";
  if (token.rfind(prefix, 0) != 0) return false;
  value = token.substr(prefix.size());
  return true;
}

void merge_into(ZeroSet& set, const FamilyZeros& found) {
  for (std::size_t j = 1; j < found.zeros.size(); ++j) {
    for (auto z : found.zeros[j]) {
      z.gamma = round_gamma(z.gamma);
      set.by_char[j].push_back(z);
    }
    std::sort(set.by_char[j].begin(), set.by_char[j].end(),
              [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma < b.gamma; });
    set.central_flag[j] = set.central_flag[j] || found.central_flag[j];
  }
}

}  // namespace

double round_gamma(double gamma) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", gamma);
  return std::stod(buf);
}

std::vector<ZeroRecord> parse_zero_lines(const std::string& text, double* height) {
  std::vector<ZeroRecord> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok, v;
    if (line[0] == '#') {
      while (ls >> tok)
        if (height && read_field(tok, "height", v)) *height = std::stod(v);
      continue;
    }
    ZeroRecord z;
    int seen = 0;
    while (ls >> tok) {
      if (read_field(tok, "q", v)) z.q = std::stoul(v), ++seen;
      else if (read_field(tok, "g", v)) z.g = std::stoul(v), ++seen;
      else if (read_field(tok, "j", v)) z.j = std::stoul(v), ++seen;
      else if (read_field(tok, "gamma", v)) z.gamma = std::stod(v), ++seen;
      else if (read_field(tok, "abs_tolerance", v)) z.abs_tolerance = std::stod(v), ++seen;
    }
    if (seen != 5) throw NumericalError("zero cache: malformed line: " + line);
    out.push_back(z);
  }
  return out;
}

ZeroCache::ZeroCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::filesystem::path ZeroCache::file_for(std::uint32_t q) const {
  return dir_ / ("zeros_q" + std::to_string(q) + ".txt");
}

bool ZeroCache::load(std::uint32_t q) {
  if (dir_.empty() || sets_.count(q)) return sets_.count(q) > 0;
  std::ifstream in(file_for(q));
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  double height = 0.0;
  const auto records = parse_zero_lines(ss.str(), &height);
  CharacterGroup group(q);
  ZeroSet set;
  set.q = q;
  set.g = group.generator();
  set.height = height;
  set.by_char.assign(group.order(), {});
  set.central_flag.assign(group.order(), 0);
  for (const auto& z : records) {
    if (z.q != q || z.g != set.g || z.j == 0 || z.j >= group.order())
      throw NumericalError("zero cache: record does not match modulus " + std::to_string(q));
    set.by_char[z.j].push_back(z);
  }
  for (auto& v : set.by_char)
    std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.gamma < b.gamma; });
  sets_[q] = std::move(set);
  return true;
}

void ZeroCache::save(const ZeroSet& set) const {
  if (dir_.empty()) return;
  const auto path = file_for(set.q);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    char head[128];
    std::snprintf(head, sizeof head, "# coverage q=%u g=%u height=%.17g\n", set.q, set.g,
                  set.height);
    out << head;
    for (std::size_t j = 1; j < set.by_char.size(); ++j)
      for (const auto& z : set.by_char[j]) out << format_record(z) << '\n';
    if (!out) throw NumericalError("zero cache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

const ZeroSet& ZeroCache::ensure(std::uint32_t q, double height) {
  std::lock_guard lock(mutex_);
  load(q);
  auto it = sets_.find(q);
  if (it != sets_.end() && it->second.height >= height) return it->second;

  LFamily family(q);
  const double H = safe_height(family, height);
  if (it == sets_.end()) {
    ZeroSet set;
    set.q = q;
    set.g = family.generator();
    set.by_char.assign(family.size(), {});
    set.central_flag.assign(family.size(), 0);
    merge_into(set, find_zeros_family(family, -H, H));
    set.height = H;
    it = sets_.emplace(q, std::move(set)).first;
  } else {
    ZeroSet& set = it->second;
    const double old = set.height;
    merge_into(set, find_zeros_family(family, old, H));
    merge_into(set, find_zeros_family(family, -H, -old));
    set.height = H;
  }
  ++computations_;
  save(it->second);
  return it->second;
}

const ZeroSet& ZeroCache::ensure_lowest(std::uint32_t q, double start_height) {
  double h = std::max(start_height, 1e-3);
  for (int round = 0; round < 40; ++round) {
    const ZeroSet& set = ensure(q, h);
    bool all = true;
    for (std::size_t j = 1; j < set.by_char.size() && all; ++j) all = !set.by_char[j].empty();
    if (all) return set;
    h = set.height * 1.5;
  }
  throw NumericalError("ensure_lowest: some character has no zero found");
}

const ZeroSet& ZeroCache::require(std::uint32_t q, double height) const {
  std::lock_guard lock(mutex_);
  auto self = const_cast<ZeroCache*>(this);
  self->load(q);
  auto it = sets_.find(q);
  const double have = it == sets_.end() ? 0.0 : it->second.height;
  if (have < height)
    throw CacheMissError("zero cache miss: q=" + std::to_string(q) + " j=all height=" +
                         std::to_string(height) + " (covered " + std::to_string(have) + ")");
  return it->second;
}

double ZeroCache::coverage(std::uint32_t q) const {
  std::lock_guard lock(mutex_);
  const_cast<ZeroCache*>(this)->load(q);
  auto it = sets_.find(q);
  return it == sets_.end() ? 0.0 : it->second.height;
}

}  // namespace dlarg
