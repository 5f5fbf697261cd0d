#ifndef NLIFT_CACHE_HPP
#define NLIFT_CACHE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nlift/rewrite.hpp"

namespace nlift {

/// FNV-1a 64 hex digest of arbitrary canonical text.
std::string content_hash(const std::string& text);

/// Content hash (FNV-1a 64, hex) of everything that determines a completed
/// system: datum, monomial order, relation list, and degree bound.
std::string cache_key(const YDDatum& d, const MonomialOrder& order,
                      const std::vector<SmashElement>& relations,
                      unsigned degree_bound);

/// Load a previously stored system; nullopt on miss or deserialization
/// failure (a corrupt entry is treated as a miss).
std::optional<RewriteSystem> cache_load(const std::string& dir,
                                        const YDDatum& d,
                                        const std::string& key);

/// Store a completed system; returns false if the directory is unusable.
bool cache_store(const std::string& dir, const std::string& key,
                 const RewriteSystem& R);

}  // namespace nlift

#endif
