#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "mutclass/diagram.h"
#include "mutclass/enumerate.h"

namespace mutclass {

struct OrbitCensus {
  std::size_t size = 0;
  bool exhausted = false;
  bool overflow = false;
  // family name ("Unknown" for unmatched members) -> member count
  std::map<std::string, std::size_t> census;
};

OrbitCensus orbit_census(const Diagram& d, const Limits& limits);

struct ServiceOptions {
  // Used by /v1/orbit when the request names no limits.
  Limits orbit_default{100'000, 2'000'000};
  // Requested limits are clamped to these.
  Limits orbit_cap{1'000'000, 20'000'000};
};

struct ServiceResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// The /v1 endpoints as a pure function of the request.
ServiceResponse handle_request(std::string_view method, std::string_view path,
                               std::string_view body, const ServiceOptions& options = {});

}  // namespace mutclass
