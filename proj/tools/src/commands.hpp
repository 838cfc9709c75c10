#pragma once

#include <map>
#include <string>

#include <json.hpp>

namespace tsc {

struct Request {
  std::string command;
  std::map<std::string, std::string> params;
  std::string format = "table";  // json | table

  // Sorted-key JSON of command and params; the cache key. The format only
  // affects rendering, never the payload.
  std::string canonical() const;
};

// Computes the payload for a request. Throws on invalid parameters.
nlohmann::json run_request(const Request& req);

// 0 computed/verified, 2 when the payload carries an "unknown" verdict.
int exit_code_for(const nlohmann::json& payload);

std::string render(const nlohmann::json& payload, const std::string& format);

}  // namespace tsc
