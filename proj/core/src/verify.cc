#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "mutclass/canon.h"
#include "mutclass/transitions.h"
#include "mutclass/verify.h"

namespace mutclass {
namespace {

std::string observed_name(const Classification& c) {
  if (!c.match) return "Unknown";
  std::string out = family_name(c.match->family);
  if (c.match->width) out += " width " + std::to_string(*c.match->width);
  return out;
}

std::string expected_name(const TransitionRule& r) {
  std::string out = r.id + ":";
  for (std::size_t i = 0; i < r.targets.size(); ++i) {
    out += (i ? " or " : " ") + describe(r.targets[i]);
  }
  return out;
}

std::vector<Diagram> members_of(const ClassSet& cls) {
  std::vector<Diagram> out;
  out.reserve(cls.size());
  for (const auto& [key, member] : cls.members) out.push_back(member);
  return out;
}

ClassSet enumerate_seed(TypeKind type, int rank, const Limits& limits) {
  return enumerate_class(dynkin_seed(type, rank), limits);
}

// ---- random recognizer-positive diagrams ----

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<StarShape> stars(int max_cycle) {
  std::vector<StarShape> out;
  for (int n = 3; n <= max_cycle; ++n) out.push_back({Star::kCycle, n});
  out.push_back({Star::kSquare, 0});
  out.push_back({Star::kDiag, 0});
  out.push_back({Star::kPerp, 0});
  return out;
}

struct Recipe {
  FamilyId first;
  std::optional<FamilyId> second;  // glued pieces
};

std::vector<Recipe> recipes(TypeKind type, int max_vertices) {
  std::vector<Recipe> out;
  auto wedges = [&](std::initializer_list<FamilyKind> kinds, bool cycle) {
    for (FamilyKind k : kinds) {
      if (!cycle) {
        out.push_back({family_wedge(k), {}});
        continue;
      }
      for (int n = 3; n <= max_vertices; ++n) out.push_back({family_wedge(k, n), {}});
    }
  };
  switch (type) {
    case TypeKind::kA:
      out.push_back({family_a(), {}});
      break;
    case TypeKind::kB:
      out.push_back({family_b(), {}});
      break;
    case TypeKind::kD:
      for (const auto& s : stars(max_vertices)) out.push_back({family_d(s), {}});
      break;
    case TypeKind::kB1:
      wedges({FamilyKind::kBCycleWedgeB, FamilyKind::kBCycleWedgeRevB}, true);
      wedges({FamilyKind::kBSquareWedgeB, FamilyKind::kBDiagWedgeB, FamilyKind::kBDiagWedgeSquare}, false);
      for (const auto& s : stars(max_vertices)) out.push_back({family_d(s), family_b()});
      break;
    case TypeKind::kC1:
      out.push_back({family_wedge(FamilyKind::kCWedgeBB), {}});
      out.push_back({family_b(), family_b()});
      break;
    case TypeKind::kD1: {
      auto all = stars(max_vertices);
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
          out.push_back({family_pair(FamilyKind::kDVee, all[i], all[j]), {}});
          out.push_back({family_d(all[i]), family_d(all[j])});
        }
      }
      wedges({FamilyKind::kDCycleWedgeSquare, FamilyKind::kDCycleWedgeDiag,
              FamilyKind::kDCycleWedgeRevDiag},
             true);
      wedges({FamilyKind::kDSquareWedgeSquare, FamilyKind::kDDiagWedgeDiag, FamilyKind::kDBoxTimes},
             false);
      break;
    }
    case TypeKind::kUnknown:
      break;
  }
  return out;
}

// Random connected induced sub-graph of a host holding its core, `size`
// vertices, as an undirected diagram.
std::optional<Diagram> random_piece(const FamilyId& family, int size, Rng& rng) {
  auto core_size = static_cast<int>(cached_host(family, 0)->core.size());
  auto host = cached_host(family, std::max(1, size - core_size));
  std::vector<int> chosen = host->core;
  if (chosen.empty()) chosen.push_back(host->center);
  if (static_cast<int>(chosen.size()) > size) return std::nullopt;
  std::vector<char> in(host->size(), 0);
  for (int v : chosen) in[v] = 1;
  while (static_cast<int>(chosen.size()) < size) {
    std::vector<int> frontier;
    for (int v : chosen) {
      for (const auto& [u, w] : host->adj[v]) {
        if (!in[u]) frontier.push_back(u);
      }
    }
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    if (frontier.empty()) return std::nullopt;
    int u = frontier[uniform(rng, 0, static_cast<int>(frontier.size()) - 1)];
    in[u] = 1;
    chosen.push_back(u);
  }
  Diagram d(size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      if (Weight w = host->weight(chosen[i], chosen[j])) d.add_edge(i, j, w);
    }
  }
  return d;
}

Diagram glue_pieces(const Diagram& a, const Diagram& b, Rng& rng) {
  const int za = uniform(rng, 0, a.size() - 1);
  const int zb = uniform(rng, 0, b.size() - 1);
  std::vector<int> map_b(b.size());
  int next = a.size();
  for (int v = 0; v < b.size(); ++v) map_b[v] = v == zb ? za : next++;
  Diagram out(a.size() + b.size() - 1);
  for (const Edge& e : a.edges()) out.add_edge(e.tail, e.head, e.weight);
  for (const Edge& e : b.edges()) out.add_edge(map_b[e.tail], map_b[e.head], e.weight);
  return out;
}

// Random orientation; an edge closing a path of two oriented triangle edges
// usually completes the directed triangle.
Diagram orient(const Diagram& d, Rng& rng) {
  auto edges = d.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  Diagram out(d.size());
  std::bernoulli_distribution coin(0.5), follow(0.9);
  for (const Edge& e : edges) {
    int forced = 0;
    for (int w = 0; w < d.size() && !forced; ++w) {
      if (out.arrow(e.head, w) > 0 && out.arrow(w, e.tail) > 0) forced = 1;
      if (out.arrow(e.tail, w) > 0 && out.arrow(w, e.head) > 0) forced = -1;
    }
    bool forward = forced ? (follow(rng) == (forced == 1)) : coin(rng);
    out.add_edge(forward ? e.tail : e.head, forward ? e.head : e.tail, e.weight);
  }
  return out;
}

std::optional<Diagram> random_candidate(const Recipe& r, int size, Rng& rng) {
  if (!r.second) {
    auto piece = random_piece(r.first, size, rng);
    if (!piece) return std::nullopt;
    return orient(*piece, rng);
  }
  if (size < 3) return std::nullopt;
  const int first = uniform(rng, 2, size - 1);
  auto a = random_piece(r.first, first, rng);
  auto b = random_piece(*r.second, size + 1 - first, rng);
  if (!a || !b) return std::nullopt;
  return orient(glue_pieces(*a, *b, rng), rng);
}

}  // namespace

void VerificationReport::merge(const VerificationReport& other) {
  diagrams += other.diagrams;
  mutations += other.mutations;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [key, count] : other.coverage) coverage[key] += count;
}

std::string VerificationReport::to_text(std::size_t max_failures) const {
  std::ostringstream out;
  out << suite << ": " << (passed() ? "pass" : "FAIL") << " (" << diagrams << " diagrams, " << mutations
      << " mutations, " << failures.size() << " failures)\n";
  for (std::size_t i = 0; i < failures.size() && i < max_failures; ++i) {
    const auto& f = failures[i];
    out << "  [" << f.diagram << "]";
    if (f.vertex >= 0) out << " k=" << f.vertex;
    out << " expected " << f.expected << ", observed " << f.observed << "\n";
  }
  if (failures.size() > max_failures) out << "  ... " << failures.size() - max_failures << " more\n";
  return out.str();
}

std::string edge_list(const Diagram& d) {
  std::string out;
  for (const Edge& e : d.edges()) {
    int tail = d.arrow(e.tail, e.head) > 0 ? e.tail : e.head;
    int head = tail == e.tail ? e.head : e.tail;
    if (!out.empty()) out += ' ';
    out += std::to_string(tail) + "->" + std::to_string(head);
    if (e.weight > 1) out += ":" + std::to_string(e.weight);
  }
  return out;
}

VerificationReport check_closure(std::span<const Diagram> samples, const std::string& suite) {
  VerificationReport report;
  report.suite = suite;
  std::map<CanonicalKey, Classification> seen;
  auto classified = [&seen](const Diagram& d) -> const Classification& {
    auto key = canonical_key(d);
    auto it = seen.find(key);
    if (it == seen.end()) it = seen.emplace(std::move(key), classify(d)).first;
    return it->second;
  };

  for (const Diagram& d : samples) {
    ++report.diagrams;
    const Classification source = classify(d);
    if (!source.match) {
      report.failures.push_back({edge_list(d), -1, "a family", "Unknown"});
      continue;
    }
    for (int k = 0; k < d.size(); ++k) {
      ++report.mutations;
      auto hit = find_rule(d, *source.match, k);
      const Classification& next = classified(mutate(d, k));
      if (!hit) {
        report.failures.push_back(
            {edge_list(d), k, "a rule for " + family_name(source.match->family), observed_name(next)});
        continue;
      }
      ++report.coverage[hit->coverage];
      bool ok = next.match && next.type == source.type &&
                std::any_of(hit->rule->targets.begin(), hit->rule->targets.end(), [&](const Target& t) {
                  return target_allows(t, d, *source.match, k, *next.match);
                });
      if (ok && source.match->width && next.match->width) {
        ok = std::abs(*next.match->width - *source.match->width) <= 1;
      }
      if (!ok) report.failures.push_back({edge_list(d), k, expected_name(*hit->rule), observed_name(next)});
    }
  }
  return report;
}

VerificationReport check_class_closure(TypeKind type, int rank, const Limits& limits) {
  ClassSet cls = enumerate_seed(type, rank, limits);
  auto members = members_of(cls);
  VerificationReport report = check_closure(members, "closure " + type_name({type, rank}));
  if (!cls.exhausted) {
    report.failures.push_back({edge_list(cls.seed), -1, "exhausted class", "limits reached"});
  }
  return report;
}

ShrinkResult shrink_cycle(int n, const Diagram& attachment, int y) {
  if (n < 3) throw InvalidInput("cycle needs at least 3 vertices, got " + std::to_string(n));
  if (attachment.size() == 0) throw InvalidInput("attachment needs at least the vertex y");
  if (y < 0 || y >= attachment.size()) throw InvalidInput("y is not an attachment vertex");
  if (!attachment.structural_defects().empty()) throw InvalidInput("malformed attachment");

  ShrinkResult r;
  r.y = n + y;
  Diagram d(n + attachment.size());
  for (int i = 1; i < n; ++i) d.add_edge(i, i - 1);
  d.add_edge(0, n - 1);
  for (const Edge& e : attachment.edges()) {
    bool forward = attachment.arrow(e.tail, e.head) > 0;
    d.add_edge(n + (forward ? e.tail : e.head), n + (forward ? e.head : e.tail), e.weight);
  }
  d.add_edge(r.y, 0);
  d.add_edge(n - 1, r.y);
  r.before = d;
  for (int k = 0; k < n - 2; ++k) {
    d = mutate(d, k);
    r.sequence.push_back(k);
  }
  r.after = d;

  std::vector<int> cycle(n);
  for (int i = 0; i < n; ++i) cycle[i] = i;
  Diagram off = induced(d, cycle);
  auto shape = dynkin_shape(off);
  MutationType want = n == 3 ? MutationType{TypeKind::kA, 3} : MutationType{TypeKind::kD, n};
  if (!shape || *shape != want) r.problems.push_back("cycle part is not of shape " + type_name(want));

  for (int i = 0; i < n; ++i) {
    for (int v = n; v < d.size(); ++v) {
      if (!d.adjacent(i, v)) continue;
      if (i == 0 && v == r.y && d.arrow(0, r.y) == 1) continue;
      r.problems.push_back("unexpected edge between " + std::to_string(i) + " and " + std::to_string(v));
    }
  }
  if (d.arrow(0, r.y) != 1) r.problems.push_back("missing 0->y of weight one");

  cycle.push_back(r.y);
  if (!is_simply_laced(induced(d, cycle))) r.problems.push_back("cycle part plus y is not simply laced");
  return r;
}

std::vector<Diagram> sample_recognized(TypeKind type, const SampleOptions& options) {
  Rng rng(options.seed);
  auto pool = recipes(type, options.max_vertices);
  std::vector<Diagram> out;
  std::set<CanonicalKey> keys;
  if (pool.empty()) return out;
  const int lo = vertices_for(type, min_rank(type));
  for (std::size_t attempt = 0; attempt < options.max_attempts && out.size() < options.per_type; ++attempt) {
    const Recipe& r = pool[uniform(rng, 0, static_cast<int>(pool.size()) - 1)];
    auto d = random_candidate(r, uniform(rng, lo, options.max_vertices), rng);
    if (!d || !is_connected(*d) || !validate(*d).empty()) continue;
    if (classify(*d).type.kind != type) continue;
    if (keys.insert(canonical_key(*d)).second) out.push_back(std::move(*d));
  }
  return out;
}

VerificationReport run_forward_check(TypeKind type, int rank, const Limits& limits) {
  VerificationReport report;
  report.suite = "forward " + type_name({type, rank});
  ClassSet cls = enumerate_seed(type, rank, limits);
  if (!cls.exhausted) report.failures.push_back({edge_list(cls.seed), -1, "exhausted class", "limits reached"});
  const MutationType want{type, rank};
  for (const auto& [key, member] : cls.members) {
    ++report.diagrams;
    auto matches = match_all(member);
    Classification c = classify(member);
    std::string observed;
    for (const auto& m : matches) observed += (observed.empty() ? "" : " and ") + family_name(m.family);
    if (c.type != want || matches.size() != 1) {
      report.failures.push_back(
          {edge_list(member), -1, type_name(want) + " via one family", observed.empty() ? "Unknown" : observed});
    }
  }
  return report;
}

VerificationReport run_reverse_check(TypeKind type, const SampleOptions& options, const Limits& limits) {
  VerificationReport report;
  report.suite = std::string("reverse ") + std::string(type_code(type));
  auto samples = sample_recognized(type, options);
  if (samples.size() < options.per_type) {
    report.failures.push_back({"", -1, std::to_string(options.per_type) + " samples",
                               std::to_string(samples.size()) + " samples"});
  }
  std::map<int, ClassSet> classes;
  for (const Diagram& d : samples) {
    ++report.diagrams;
    const int rank = rank_for(type, d.size());
    auto it = classes.find(rank);
    if (it == classes.end()) it = classes.emplace(rank, enumerate_seed(type, rank, limits)).first;
    const ClassSet& cls = it->second;
    // An exhausted class holds everything equivalent to the seed.
    if (!cls.exhausted) {
      report.failures.push_back({edge_list(d), -1, "exhausted class", "limits reached"});
    } else if (!cls.contains(canonical_key(d))) {
      report.failures.push_back({edge_list(d), -1, "equivalent to " + type_name({type, rank}) + " seed",
                                 "not in the seed class"});
    }
  }
  return report;
}

}  // namespace mutclass
