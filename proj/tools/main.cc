#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "http_server.h"
#include "mutclass/io.h"
#include "mutclass/recognize.h"
#include "mutclass/service.h"
#include "mutclass/verify.h"

namespace {

using namespace mutclass;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kUnclassified = 3, kVerifyFailed = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

TypeKind type_arg(const std::string& code) {
  auto t = parse_type_code(code);
  if (!t || *t == TypeKind::kUnknown) throw UsageError("unknown type " + code);
  return *t;
}

int cmd_classify(const std::string& file) {
  Diagram d = parse_document(slurp(file));
  Classification c = classify(d);
  if (!c.match) {
    std::cout << "Unknown\n";
    return kUnclassified;
  }
  const FamilyMatch& m = *c.match;
  std::cout << type_name(c.type) << ", family " << family_name(m.family) << "\n";
  if (m.n() > 0 || m.m() > 0) {
    std::cout << "params:";
    if (m.n() > 0) std::cout << " n=" << m.n();
    if (m.m() > 0) std::cout << " m=" << m.m();
    std::cout << "\n";
  }
  if (m.width) std::cout << "width: " << *m.width << "\n";
  return kOk;
}

int cmd_mutate(const std::string& file, const std::string& vertex, const std::string& out) {
  Diagram d = parse_document(slurp(file));
  auto k = d.index_of(vertex);
  if (!k) {
    std::cerr << "error: unknown vertex " << vertex << "\n";
    return kInvalid;
  }
  emit(serialize_document(mutate(d, *k)), out);
  return kOk;
}

int cmd_orbit(const std::string& file, std::size_t max_members) {
  Diagram d = parse_document(slurp(file));
  Limits limits;
  limits.max_members = max_members;
  OrbitCensus o = orbit_census(d, limits);
  std::cout << "size: " << o.size << "\n";
  std::cout << "exhausted: " << (o.exhausted ? "yes" : o.overflow ? "no (infinite)" : "no") << "\n";
  for (const auto& [name, count] : o.census) std::cout << name << " " << count << "\n";
  return kOk;
}

struct VerifyArgs {
  std::string type;
  int rank = 0;
  bool all = false;
  int max_rank = 0;
  std::size_t reverse = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::pair<TypeKind, int>> jobs;
  if (a.all) {
    if (a.max_rank <= 0) throw UsageError("--all needs --max-rank");
    for (TypeKind t : {TypeKind::kA, TypeKind::kB, TypeKind::kD, TypeKind::kB1, TypeKind::kC1,
                       TypeKind::kD1}) {
      for (int r = min_rank(t); r <= a.max_rank; ++r) jobs.push_back({t, r});
    }
  } else {
    if (a.type.empty() || a.rank <= 0) throw UsageError("give --type and --rank, or --all");
    TypeKind t = type_arg(a.type);
    if (a.rank < min_rank(t)) throw UsageError("rank below the minimum for " + a.type);
    jobs.push_back({t, a.rank});
  }

  std::vector<VerificationReport> reports;
  for (auto [t, r] : jobs) {
    reports.push_back(run_forward_check(t, r));
    if (is_affine(t)) reports.push_back(check_class_closure(t, r));
  }
  if (a.reverse > 0) {
    std::vector<TypeKind> types;
    for (auto [t, r] : jobs) {
      if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
    }
    for (TypeKind t : types) {
      SampleOptions o;
      o.per_type = a.reverse;
      reports.push_back(run_reverse_check(t, o));
    }
  }

  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (a.json) {
      std::cout << report_to_json(r);
    } else {
      std::cout << r.to_text();
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_seed(const std::string& type, int rank) {
  TypeKind t = type_arg(type);
  if (rank < min_rank(t)) throw UsageError("rank below the minimum for " + type);
  std::cout << serialize_document(dynkin_seed(t, rank));
  return kOk;
}

int cmd_serve(const std::string& addr_text) {
  Address addr = parse_address(addr_text);
  httplib::Server server;
  mount_routes(server, ServiceOptions{});
  std::cerr << "listening on " << addr.host << ":" << addr.port << "\n";
  if (!server.listen(addr.host, addr.port)) {
    std::cerr << "error: cannot listen on " << addr_text << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation classes of Dynkin and affine Dynkin diagrams"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string vertex;
  std::string out;
  std::size_t max_members = 1'000'000;
  VerifyArgs va;
  std::string seed_type;
  int seed_rank = 0;
  std::string addr = default_address();

  auto* classify_cmd = app.add_subcommand("classify", "Print mutation type, family, params and width");
  classify_cmd->add_option("file", file, "Diagram document, - for stdin");

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at one vertex");
  mutate_cmd->add_option("file", file, "Diagram document, - for stdin");
  mutate_cmd->add_option("-k,--vertex", vertex, "Vertex id")->required();
  mutate_cmd->add_option("-o,--output", out, "Output document");

  auto* orbit_cmd = app.add_subcommand("orbit", "Enumerate the mutation class");
  orbit_cmd->add_option("file", file, "Diagram document, - for stdin");
  orbit_cmd->add_option("--max-members", max_members, "Stop after this many classes")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--type", va.type, "A, B, D, B1, C1 or D1");
  verify_cmd->add_option("--rank", va.rank, "Rank");
  verify_cmd->add_flag("--all", va.all, "Every type up to --max-rank");
  verify_cmd->add_option("--max-rank", va.max_rank, "Largest rank with --all");
  verify_cmd->add_option("--reverse", va.reverse, "Random recognized samples per type");
  verify_cmd->add_flag("--json", va.json, "JSON reports");

  auto* seed_cmd = app.add_subcommand("seed", "Emit a Dynkin seed document");
  seed_cmd->add_option("type", seed_type, "A, B, D, B1, C1 or D1")->required();
  seed_cmd->add_option("rank", seed_rank, "Rank")->required();

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  dot_cmd->add_option("file", file, "Diagram document, - for stdin");

  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP service");
  serve_cmd->add_option("--addr", addr, std::string("host:port, default from ") + kAddressEnv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(file);
    if (*mutate_cmd) return cmd_mutate(file, vertex, out);
    if (*orbit_cmd) return cmd_orbit(file, max_members);
    if (*verify_cmd) return cmd_verify(va);
    if (*seed_cmd) return cmd_seed(seed_type, seed_rank);
    if (*dot_cmd) {
      std::cout << to_dot(parse_document(slurp(file)));
      return kOk;
    }
    if (*serve_cmd) return cmd_serve(addr);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "invalid diagram:\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v.message << "\n";
    return kInvalid;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
