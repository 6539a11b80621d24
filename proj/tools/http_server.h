#pragma once

#include <string>
#include <string_view>

#include <httplib.h>

#include "mutclass/service.h"

namespace mutclass {

struct Address {
  std::string host;
  int port = 0;
};

inline constexpr const char* kAddressEnv = "MUTCLASS_ADDR";
inline constexpr const char* kDefaultAddress = "127.0.0.1:8080";

// "host:port"; throws std::invalid_argument.
Address parse_address(std::string_view text);

// Address from the environment, else the built-in default.
std::string default_address();

void mount_routes(httplib::Server& server, const ServiceOptions& options);

}  // namespace mutclass
