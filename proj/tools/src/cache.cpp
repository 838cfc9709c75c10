#include "cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace tsc {

namespace fs = std::filesystem;

std::string request_hash(const std::string& canonical_request) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_request) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

nlohmann::json cache_get_or_compute(const CacheConfig& config,
                                    const std::string& canonical_request,
                                    const std::function<nlohmann::json()>& compute) {
  if (config.directory.empty() || config.bypass) return compute();

  std::error_code ec;
  fs::create_directories(config.directory, ec);
  const fs::path path = fs::path(config.directory) / (request_hash(canonical_request) + ".json");

  std::optional<nlohmann::json> cached;
  if (fs::exists(path, ec)) {
    std::ifstream in(path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (!doc.is_discarded() && doc.value("version", -1) == kCacheVersion &&
        doc.value("request", std::string{}) == canonical_request && doc.contains("payload"))
      cached = doc["payload"];
  }

  if (cached && !config.verify) return *cached;

  nlohmann::json payload = compute();
  if (cached && config.verify && cached->dump() != payload.dump())
    throw std::runtime_error("cache verify failed: stored payload differs from recomputation for " +
                             path.string());

  nlohmann::json doc{{"version", kCacheVersion}, {"request", canonical_request}, {"payload", payload}};
  const fs::path tmp = path.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) {
      std::cerr << "warning: cache directory not writable, proceeding uncached\n";
      return payload;
    }
    out << doc.dump();
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::cerr << "warning: cache write failed: " << ec.message() << "\n";
    fs::remove(tmp, ec);
  }
  return payload;
}

}  // namespace tsc
