#include "mutclass/io.h"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "document_json.h"

namespace mutclass {
namespace detail {
namespace {

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

void only_keys(const Json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ParseError("expected an object", 0, path);
  for (const auto& [k, v] : obj.items()) {
    bool known = std::any_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; });
    if (!known) throw ParseError("unknown field", 0, at(path, k));
  }
}

const Json& required(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing field", 0, at(path, key));
  return *it;
}

std::string id_string(const Json& v, const std::string& path) {
  if (!v.is_string()) throw ParseError("expected a string", 0, path);
  auto s = v.get<std::string>();
  if (s.empty()) throw ParseError("empty id", 0, path);
  return s;
}

std::vector<int> natural_order(const Diagram& d) {
  std::vector<int> order(d.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return id_less(d.id(a), d.id(b)); });
  return order;
}

}  // namespace

Json document_json(const Diagram& d) {
  std::vector<int> order = natural_order(d);
  std::vector<int> pos(d.size());
  for (int p = 0; p < d.size(); ++p) pos[order[p]] = p;

  Json vertices = Json::array();
  for (int v : order) {
    Json entry = {{"id", d.id(v)}};
    if (!d.label(v).empty()) entry["label"] = d.label(v);
    vertices.push_back(std::move(entry));
  }
  std::vector<Edge> edges;
  for (const Edge& e : d.edges()) {
    edges.push_back(d.arrow(e.tail, e.head) > 0 ? e : Edge{e.head, e.tail, e.weight});
  }
  std::sort(edges.begin(), edges.end(), [&](const Edge& a, const Edge& b) {
    return std::pair(pos[a.tail], pos[a.head]) < std::pair(pos[b.tail], pos[b.head]);
  });
  Json list = Json::array();
  for (const Edge& e : edges) {
    Json entry = {{"tail", d.id(e.tail)}, {"head", d.id(e.head)}, {"weight", e.weight}};
    if (e.weight == 4) entry["display"] = "double";
    list.push_back(std::move(entry));
  }
  return Json{{"format_version", kFormatVersion}, {"vertices", vertices}, {"edges", list}};
}

Diagram diagram_from_json(const Json& doc, const std::string& path) {
  only_keys(doc, path, {"format_version", "vertices", "edges"});
  const Json& version = required(doc, path, "format_version");
  if (!version.is_number_integer()) {
    throw ParseError("expected an integer", 0, at(path, "format_version"));
  }
  if (version.get<long long>() != kFormatVersion) {
    throw ParseError("unsupported version " + version.dump(), 0, at(path, "format_version"));
  }

  const std::string vpath = at(path, "vertices");
  const Json& vertices = required(doc, path, "vertices");
  if (!vertices.is_array()) throw ParseError("expected an array", 0, vpath);
  std::vector<std::string> ids;
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string p = at(vpath, i);
    only_keys(vertices[i], p, {"id", "label"});
    std::string id = id_string(required(vertices[i], p, "id"), at(p, "id"));
    if (!seen.insert(id).second) throw ParseError("duplicate vertex id " + id, 0, at(p, "id"));
    ids.push_back(std::move(id));
    auto label = vertices[i].find("label");
    if (label == vertices[i].end()) {
      labels.emplace_back();
    } else if (label->is_string()) {
      labels.push_back(label->get<std::string>());
    } else {
      throw ParseError("expected a string", 0, at(p, "label"));
    }
  }

  Diagram d(ids);
  for (int v = 0; v < d.size(); ++v) d.set_label(v, labels[v]);

  const std::string epath = at(path, "edges");
  const Json& edges = required(doc, path, "edges");
  if (!edges.is_array()) throw ParseError("expected an array", 0, epath);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string p = at(epath, i);
    const Json& e = edges[i];
    only_keys(e, p, {"tail", "head", "weight", "display"});
    int ends[2];
    const char* names[2] = {"tail", "head"};
    for (int s = 0; s < 2; ++s) {
      std::string id = id_string(required(e, p, names[s]), at(p, names[s]));
      auto v = d.index_of(id);
      if (!v) throw ParseError("undeclared vertex " + id, 0, at(p, names[s]));
      ends[s] = *v;
    }
    const Json& w = required(e, p, "weight");
    if (!w.is_number_integer()) throw ParseError("expected an integer", 0, at(p, "weight"));
    if (w.is_number_unsigned() && w.get<unsigned long long>() > INT64_MAX) {
      throw ParseError("weight out of range", 0, at(p, "weight"));
    }
    Weight weight = w.get<Weight>();
    auto display = e.find("display");
    if (display != e.end() && (*display != "double" || weight != 4)) {
      throw ParseError("display \"double\" marks weight-4 edges only", 0, at(p, "display"));
    }
    d.add_edge(ends[0], ends[1], weight);
  }
  return d;
}

Json violations_json(const Diagram& d, const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const Violation& v : violations) {
    Json witness = Json::array();
    for (int u : v.witness) witness.push_back(d.id(u));
    out.push_back({{"kind", std::string(to_string(v.kind))},
                   {"message", v.message},
                   {"witness", witness}});
  }
  return out;
}

}  // namespace detail

namespace {

std::string field_message(const std::string& message, int line, const std::string& field) {
  std::string where = line > 0 ? "line " + std::to_string(line) : field;
  return where.empty() ? message : where + ": " + message;
}

std::string first_message(const std::vector<Violation>& violations) {
  if (violations.empty()) return "invalid diagram";
  std::string out = violations.front().message;
  if (violations.size() > 1) out += " (+" + std::to_string(violations.size() - 1) + " more)";
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, std::string field)
    : std::runtime_error(field_message(message, line, field)),
      line_(line),
      field_(std::move(field)) {}

ValidationError::ValidationError(Diagram diagram, std::vector<Violation> violations)
    : std::runtime_error(first_message(violations)),
      diagram_(std::move(diagram)),
      violations_(std::move(violations)) {}

bool id_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t i0 = i, j0 = j;
      while (i < a.size() && digit(a[i])) ++i;
      while (j < b.size() && digit(b[j])) ++j;
      auto x = a.substr(i0, i - i0), y = b.substr(j0, j - j0);
      while (x.size() > 1 && x.front() == '0') x.remove_prefix(1);
      while (y.size() > 1 && y.front() == '0') y.remove_prefix(1);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

Diagram parse_document_unvalidated(std::string_view text) {
  detail::Json doc;
  try {
    doc = detail::Json::parse(text.begin(), text.end());
  } catch (const detail::Json::parse_error& e) {
    std::size_t end = std::min(e.byte, text.size());
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + end, '\n'));
    std::string what = e.what();
    auto cut = what.find(": ", what.find("parse error"));
    throw ParseError(cut == std::string::npos ? what : what.substr(cut + 2), line, "");
  }
  return detail::diagram_from_json(doc, "");
}

Diagram parse_document(std::string_view text) {
  Diagram d = parse_document_unvalidated(text);
  auto violations = validate(d);
  if (!violations.empty()) throw ValidationError(std::move(d), std::move(violations));
  return d;
}

std::string serialize_document(const Diagram& d) {
  return detail::document_json(d).dump(2) + "\n";
}

std::string serialize_host(const HostGraph& host) {
  Diagram d(host.size());
  for (int u = 0; u < host.size(); ++u) {
    std::string role = host.role_of(u);
    d.set_label(u, role.empty() ? host.names[u] : role);
    for (auto [v, w] : host.adj[u]) {
      if (u < v) d.add_edge(u, v, w);
    }
  }
  return serialize_document(d);
}

std::string to_dot(const Diagram& d) {
  std::ostringstream out;
  out << "digraph diagram {\n";
  for (int v = 0; v < d.size(); ++v) {
    out << "  " << dot_quote(d.id(v));
    if (!d.label(v).empty()) out << " [label=" << dot_quote(d.label(v)) << "]";
    out << ";\n";
  }
  for (const Edge& e : d.edges()) {
    auto [t, h] = d.arrow(e.tail, e.head) > 0 ? std::pair(e.tail, e.head) : std::pair(e.head, e.tail);
    out << "  " << dot_quote(d.id(t)) << " -> " << dot_quote(d.id(h));
    if (e.weight == 4) {
      out << " [label=\"4\", color=\"black:invis:black\"]";
    } else if (e.weight > 1) {
      out << " [label=\"" << e.weight << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string report_to_json(const VerificationReport& report) {
  detail::Json failures = detail::Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"diagram", f.diagram},
                        {"vertex", f.vertex},
                        {"expected", f.expected},
                        {"observed", f.observed}});
  }
  detail::Json coverage = detail::Json::object();
  for (const auto& [k, v] : report.coverage) coverage[k] = v;
  detail::Json out = {{"suite", report.suite},
                      {"passed", report.passed()},
                      {"diagrams", report.diagrams},
                      {"mutations", report.mutations},
                      {"failures", failures},
                      {"coverage", coverage}};
  return out.dump(2) + "\n";
}

}  // namespace mutclass
