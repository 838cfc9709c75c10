#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

namespace tsc {

inline constexpr int kCacheVersion = 1;

struct CacheConfig {
  std::string directory;  // empty: caching disabled
  bool bypass = false;    // --no-cache
  bool verify = false;    // recompute and compare against the stored payload
};

// Stable 64-bit FNV-1a over the canonical request string.
std::string request_hash(const std::string& canonical_request);

// Returns the payload, from cache on a version+request hit, computing and
// storing otherwise. With verify set, a cached payload that differs from the
// recomputation throws std::runtime_error. Unwritable directories only warn.
nlohmann::json cache_get_or_compute(const CacheConfig& config,
                                    const std::string& canonical_request,
                                    const std::function<nlohmann::json()>& compute);

}  // namespace tsc
