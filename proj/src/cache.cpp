#include "nlift/cache.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace nlift {

namespace {

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

std::string content_hash(const std::string& text) {
  std::ostringstream hex;
  hex << std::hex << fnv1a(text);
  return hex.str();
}

std::string cache_key(const YDDatum& d, const MonomialOrder& order,
                      const std::vector<SmashElement>& relations,
                      unsigned degree_bound) {
  std::ostringstream os;
  os << d.canonical_string() << "|" << order.to_string() << "|D"
     << degree_bound;
  for (const auto& r : relations) os << "|" << r.to_string();
  std::ostringstream hex;
  hex << std::hex << fnv1a(os.str());
  return hex.str();
}

std::optional<RewriteSystem> cache_load(const std::string& dir,
                                        const YDDatum& d,
                                        const std::string& key) {
  if (dir.empty()) return std::nullopt;
  std::filesystem::path p = std::filesystem::path(dir) / (key + ".rws");
  std::ifstream f(p);
  if (!f) return std::nullopt;
  std::ostringstream os;
  os << f.rdbuf();
  try {
    return RewriteSystem::deserialize(d, os.str());
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

bool cache_store(const std::string& dir, const std::string& key,
                 const RewriteSystem& R) {
  if (dir.empty()) return false;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::filesystem::path p = std::filesystem::path(dir) / (key + ".rws");
  std::ofstream f(p);
  if (!f) return false;
  f << R.serialize();
  return static_cast<bool>(f);
}

}  // namespace nlift
