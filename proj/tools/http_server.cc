#include "http_server.h"

#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace mutclass {

Address parse_address(std::string_view text) {
  auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("expected host:port, got " + std::string(text));
  }
  Address out;
  out.host = std::string(text.substr(0, colon));
  auto digits = text.substr(colon + 1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out.port);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || out.port < 0 ||
      out.port > 65535) {
    throw std::invalid_argument("bad port in " + std::string(text));
  }
  return out;
}

std::string default_address() {
  const char* env = std::getenv(kAddressEnv);
  return env && *env ? env : kDefaultAddress;
}

void mount_routes(httplib::Server& server, const ServiceOptions& options) {
  auto handler = [options](const httplib::Request& req, httplib::Response& res) {
    ServiceResponse r = handle_request(req.method, req.path, req.body, options);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  for (const char* path : {"/v1/classify", "/v1/mutate", "/v1/validate", "/v1/orbit"}) {
    server.Post(path, handler);
    server.Get(path, handler);
  }
  server.Get("/v1/health", handler);
  server.Post("/v1/health", handler);
}

}  // namespace mutclass
