#include "mutclass/service.h"

#include <algorithm>

#include "document_json.h"
#include "mutclass/io.h"
#include "mutclass/recognize.h"

namespace mutclass {
namespace {

using detail::Json;

struct HttpError {
  int status;
  Json body;
};

ServiceResponse respond(int status, const Json& body) {
  return {status, body.dump() + "\n"};
}

HttpError parse_failure(const ParseError& e) {
  return {400, {{"error", e.what()}, {"field", e.field()}, {"line", e.line()}, {"violations", Json::array()}}};
}

Json parse_body(std::string_view body) {
  try {
    Json j = Json::parse(body.begin(), body.end());
    if (!j.is_object()) throw HttpError{400, {{"error", "request body must be an object"}}};
    return j;
  } catch (const Json::parse_error& e) {
    throw HttpError{400, {{"error", e.what()}}};
  }
}

void only_keys(const Json& j, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; })) {
      throw HttpError{400, {{"error", "unknown field " + k}}};
    }
  }
}

Diagram read_diagram(const Json& req, bool check) {
  auto it = req.find("diagram");
  if (it == req.end()) throw HttpError{400, {{"error", "missing field diagram"}}};
  Diagram d;
  try {
    d = detail::diagram_from_json(*it, "diagram");
  } catch (const ParseError& e) {
    throw parse_failure(e);
  }
  if (check) {
    auto violations = validate(d);
    if (!violations.empty()) {
      throw HttpError{400, {{"error", "invalid diagram"},
                            {"violations", detail::violations_json(d, violations)}}};
    }
  }
  return d;
}

Json classify_json(const Diagram& d) {
  Classification c = classify(d);
  Json out;
  if (c.type.kind == TypeKind::kUnknown) {
    out = {{"type", "Unknown"}, {"rank", nullptr}, {"name", "Unknown"},
           {"family", nullptr}, {"params", Json::object()}, {"width", nullptr}};
    return out;
  }
  const FamilyMatch& m = *c.match;
  Json params = Json::object();
  if (m.n() > 0) params["n"] = m.n();
  if (m.m() > 0) params["m"] = m.m();
  out = {{"type", std::string(type_code(c.type.kind))},
         {"rank", c.type.rank},
         {"name", type_name(c.type)},
         {"family", family_name(m.family)},
         {"params", params}};
  out["width"] = m.width ? Json(*m.width) : Json(nullptr);
  return out;
}

std::size_t limit_field(const Json& limits, const char* key, std::size_t fallback,
                        std::size_t cap) {
  auto it = limits.find(key);
  if (it == limits.end()) return std::min(fallback, cap);
  if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
    throw HttpError{400, {{"error", std::string("limits.") + key + " must be a positive integer"}}};
  }
  return std::min(it->get<std::size_t>(), cap);
}

ServiceResponse route(std::string_view method, std::string_view path, std::string_view body,
                      const ServiceOptions& options) {
  if (path == "/v1/health") {
    if (method != "GET") throw HttpError{405, {{"error", "method not allowed"}}};
    return respond(200, {{"status", "ok"}});
  }
  bool known = path == "/v1/classify" || path == "/v1/mutate" || path == "/v1/validate" ||
               path == "/v1/orbit";
  if (!known) throw HttpError{404, {{"error", "no such endpoint"}}};
  if (method != "POST") throw HttpError{405, {{"error", "method not allowed"}}};

  Json req = parse_body(body);
  if (path == "/v1/classify") {
    only_keys(req, {"diagram"});
    return respond(200, classify_json(read_diagram(req, true)));
  }
  if (path == "/v1/validate") {
    only_keys(req, {"diagram"});
    Diagram d = read_diagram(req, false);
    return respond(200, {{"violations", detail::violations_json(d, validate(d))}});
  }
  if (path == "/v1/mutate") {
    only_keys(req, {"diagram", "vertex"});
    Diagram d = read_diagram(req, true);
    auto v = req.find("vertex");
    if (v == req.end() || !v->is_string()) {
      throw HttpError{400, {{"error", "vertex must be a string id"}}};
    }
    auto k = d.index_of(v->get<std::string>());
    if (!k) throw HttpError{422, {{"error", "unknown vertex " + v->get<std::string>()}}};
    return respond(200, {{"diagram", detail::document_json(mutate(d, *k))}});
  }
  only_keys(req, {"diagram", "limits"});
  Diagram d = read_diagram(req, true);
  Limits limits = options.orbit_default;
  if (auto it = req.find("limits"); it != req.end()) {
    if (!it->is_object()) throw HttpError{400, {{"error", "limits must be an object"}}};
    only_keys(*it, {"max_members", "max_steps"});
    limits.max_members = limit_field(*it, "max_members", limits.max_members,
                                     options.orbit_cap.max_members);
    limits.max_steps = limit_field(*it, "max_steps", limits.max_steps,
                                   options.orbit_cap.max_steps);
  } else {
    limits.max_members = std::min(limits.max_members, options.orbit_cap.max_members);
    limits.max_steps = std::min(limits.max_steps, options.orbit_cap.max_steps);
  }
  OrbitCensus o = orbit_census(d, limits);
  if (!o.exhausted) {
    std::string why = o.overflow ? "mutation class is infinite" : "limit exceeded";
    return respond(503, {{"error", why}, {"size", o.size}, {"exhausted", false}});
  }
  Json census = Json::object();
  for (const auto& [name, count] : o.census) census[name] = count;
  return respond(200, {{"size", o.size}, {"exhausted", true}, {"census", census}});
}

}  // namespace

OrbitCensus orbit_census(const Diagram& d, const Limits& limits) {
  ClassSet cls = enumerate_class(d, limits);
  OrbitCensus out;
  out.size = cls.size();
  out.exhausted = cls.exhausted;
  out.overflow = cls.overflow;
  for (const auto& [key, member] : cls.members) {
    Classification c = classify(member);
    ++out.census[c.match ? family_name(c.match->family) : "Unknown"];
  }
  return out;
}

ServiceResponse handle_request(std::string_view method, std::string_view path,
                               std::string_view body, const ServiceOptions& options) {
  try {
    return route(method, path, body, options);
  } catch (const HttpError& e) {
    return respond(e.status, e.body);
  } catch (const std::exception& e) {
    return respond(500, {{"error", e.what()}});
  }
}

}  // namespace mutclass
