#include "mutclass/recognize.h"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string_view>

namespace mutclass {
namespace {

bool has_role(const std::string& roles, char letter) {
  std::size_t start = 0;
  while (start <= roles.size()) {
    std::size_t end = roles.find('=', start);
    if (end == std::string::npos) end = roles.size();
    if (end > start && roles[start] == letter) return true;
    start = end + 1;
  }
  return false;
}

// Facts about one diagram shared by all recognizers.
struct Analysis {
  explicit Analysis(const Diagram& diagram) : d(diagram) {
    cycles = chordless_cycles(d);
    cyclic = true;
    for (const auto& c : cycles) {
      bool dir = is_directed_cycle(d, c);
      directed.push_back(dir);
      cyclic = cyclic && dir;
      lengths.insert(static_cast<int>(c.size()));
    }
    for (const Edge& e : d.edges()) {
      if (e.weight == 2) {
        ++w2;
      } else if (e.weight == 4) {
        ++w4;
      } else if (e.weight != 1) {
        ++other;
      }
    }
  }

  bool simply_laced() const { return w2 == 0 && w4 == 0 && other == 0; }

  // Every chordless cycle is directed except possibly the one on `exempt`.
  bool oriented_except(std::vector<int> exempt) const {
    std::sort(exempt.begin(), exempt.end());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (!directed[i] && cycles[i] != exempt) return false;
    }
    return true;
  }

  const Diagram& d;
  std::vector<std::vector<int>> cycles;
  std::vector<char> directed;
  std::set<int> lengths;
  bool cyclic = true;
  int w2 = 0;
  int w4 = 0;
  int other = 0;
};

using Extra = std::function<bool(const Analysis&, const HostGraph&, const std::vector<int>&)>;

struct Rules {
  int min_vertices = 1;
  bool simply_laced = false;
  bool oriented = true;  // the whole diagram is cyclically oriented
  std::function<bool(const Analysis&)> weights;
  Extra extra;
};

// Diagram vertex placed on the core vertex with the given role.
int at(const HostGraph& h, const std::vector<int>& image, std::string_view role) {
  auto v = h.vertex(role);
  if (!v) throw InternalError("host " + family_name(h.family) + " has no role " + std::string(role));
  auto it = std::find(h.core.begin(), h.core.end(), *v);
  if (it == h.core.end()) throw InternalError(std::string(role) + " is not a core vertex");
  return image[it - h.core.begin()];
}

std::vector<int> at_all(const HostGraph& h, const std::vector<int>& image, std::string_view base,
                        int from, int to) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(at(h, image, std::string(base) + std::to_string(i)));
  return out;
}

std::function<bool(const Analysis&)> exactly(int w2, int w4) {
  return [w2, w4](const Analysis& a) { return a.other == 0 && a.w2 == w2 && a.w4 == w4; };
}

Rules rules_for(const FamilyId& f, bool constituent) {
  Rules r;
  r.min_vertices = vertices_for(family_type(f.kind), min_rank(family_type(f.kind)));
  switch (f.kind) {
    case FamilyKind::kA:
      r.simply_laced = true;
      break;
    case FamilyKind::kB:
      r.min_vertices = 2;
      r.weights = [](const Analysis& a) {
        return a.other == 0 && a.w4 == 0 && a.w2 >= 1 && a.w2 <= 2;
      };
      break;
    case FamilyKind::kD:
      r.simply_laced = true;
      if (f.first.kind == Star::kCycle) r.min_vertices = constituent ? 4 : 5;
      if (f.first.kind == Star::kPerp) r.min_vertices = constituent ? 3 : 4;
      if (constituent && f.first.kind != Star::kCycle && f.first.kind != Star::kPerp) {
        r.min_vertices = 4;
      }
      break;
    case FamilyKind::kBSquareWedgeB:
      r.weights = exactly(2, 0);
      break;
    case FamilyKind::kBDiagWedgeB:
      r.weights = exactly(3, 0);
      break;
    case FamilyKind::kBDiagWedgeSquare:
      r.weights = exactly(2, 1);
      break;
    case FamilyKind::kBCycleWedgeB:
      r.weights = exactly(2, 0);
      break;
    case FamilyKind::kBCycleWedgeRevB: {
      r.weights = exactly(2, 0);
      r.oriented = false;
      const int n = f.n;
      r.extra = [n](const Analysis& a, const HostGraph& h, const std::vector<int>& img) {
        VertexPair e{at(h, img, "a1"), at(h, img, "a2")};
        return is_cyclically_oriented(a.d, e) && !is_directed_cycle(a.d, at_all(h, img, "a", 1, n));
      };
      break;
    }
    case FamilyKind::kCWedgeBB:
      r.weights = exactly(2, 1);
      break;
    case FamilyKind::kDVee:
      r.simply_laced = true;
      if (f.first.kind == Star::kCycle && f.second.kind == Star::kCycle) {
        r.min_vertices = std::max(r.min_vertices, 6);
        r.oriented = false;
        r.extra = [](const Analysis& a, const HostGraph& h, const std::vector<int>& img) {
          int bullet = at(h, img, "•");
          std::vector<int> rim;
          for (int v : img) {
            if (v != bullet) rim.push_back(v);
          }
          return a.oriented_except(rim);
        };
      }
      break;
    case FamilyKind::kDCycleWedgeSquare: {
      r.simply_laced = true;
      r.oriented = false;
      const int n = f.n;
      r.min_vertices = std::max(6, n + 1);
      r.extra = [n](const Analysis& a, const HostGraph& h, const std::vector<int>& img) {
        auto exempt = at_all(h, img, "a", 1, n - 1);
        exempt.push_back(at(h, img, "a'2"));
        VertexPair e{at(h, img, "•1"), at(h, img, "•2")};
        std::vector<int> square = {e.first, at(h, img, "a'1"), e.second, at(h, img, "a'2")};
        return a.oriented_except(exempt) && !is_directed_cycle(a.d, exempt) &&
               is_directed_cycle(a.d, square, e);
      };
      break;
    }
    case FamilyKind::kDCycleWedgeDiag:
      r.simply_laced = true;
      break;
    case FamilyKind::kDCycleWedgeRevDiag: {
      r.simply_laced = true;
      r.oriented = false;
      const int n = f.n;
      r.extra = [n](const Analysis& a, const HostGraph& h, const std::vector<int>& img) {
        VertexPair e{at(h, img, "•1"), at(h, img, "•2")};
        std::vector<int> square = {e.first, e.second, at(h, img, "a'1"), at(h, img, "a'2")};
        std::sort(square.begin(), square.end());
        for (const auto& c : chordless_cycles(a.d, e)) {
          if (c != square && !is_directed_cycle(a.d, c, e)) return false;
        }
        return !is_directed_cycle(a.d, at_all(h, img, "a", 1, n));
      };
      break;
    }
    case FamilyKind::kDSquareWedgeSquare:
      r.simply_laced = true;
      r.oriented = false;
      r.extra = [](const Analysis& a, const HostGraph& h, const std::vector<int>& img) {
        int x1 = at(h, img, "x1"), x2 = at(h, img, "x2"), b = at(h, img, "•");
        std::vector<int> square = {x1, x2, at(h, img, "a1"), at(h, img, "a2")};
        for (int i = 2; i < 4; ++i) {
          std::vector<int> cyc = {x1, b, x2, square[i]};
          std::sort(cyc.begin(), cyc.end());
          if (!is_directed_cycle(a.d, cyc)) return false;
        }
        std::vector<int> rest;
        for (int v = 0; v < a.d.size(); ++v) {
          if (std::find(square.begin(), square.end(), v) == square.end()) rest.push_back(v);
        }
        return is_cyclically_oriented(induced(a.d, rest));
      };
      break;
    case FamilyKind::kDDiagWedgeDiag:
      r.weights = exactly(0, 1);
      break;
    case FamilyKind::kDBoxTimes:
      r.simply_laced = true;
      r.oriented = false;
      r.extra = [](const Analysis& a, const HostGraph& h, const std::vector<int>& img) {
        return a.oriented_except(at_all(h, img, "a", 1, 4));
      };
      break;
    default:
      throw InternalError(family_name(f) + " has no host rules");
  }
  return r;
}

struct Glue {
  int z = 0;
  bool core = false;
};

std::optional<FamilyMatch> match_host(const Analysis& a, const FamilyId& f, bool constituent,
                                      std::optional<Glue> glue = std::nullopt) {
  const Diagram& d = a.d;
  Rules r = rules_for(f, constituent);
  if (d.size() < r.min_vertices) return std::nullopt;
  if (r.simply_laced && !a.simply_laced()) return std::nullopt;
  if (r.weights && !r.weights(a)) return std::nullopt;
  if (r.oriented && !a.cyclic) return std::nullopt;
  if (glue && !glue->core) {
    // z may only close off its own block: one neighbour, or two adjacent ones.
    auto nb = d.neighbors(glue->z);
    if (nb.size() > 2 || (nb.size() == 2 && !d.adjacent(nb[0], nb[1]))) return std::nullopt;
  }

  std::shared_ptr<const HostGraph> host;
  {
    int core_size = static_cast<int>(cached_host(f, 0)->core.size());
    if (core_size > d.size()) return std::nullopt;
    host = cached_host(f, f.kind == FamilyKind::kA ? d.size() - 1 : d.size() - core_size);
  }
  const HostGraph& h = *host;

  EmbedOptions opt;
  opt.accept = [&](const std::vector<int>& img) {
    if (glue) {
      auto it = std::find(img.begin(), img.end(), glue->z);
      bool placed = it != img.end();
      if (placed != glue->core) return false;
      if (placed) {
        if (!has_role(h.role_of(h.core[it - img.begin()]), 'x')) return false;
        for (int u : d.neighbors(glue->z)) {
          if (std::find(img.begin(), img.end(), u) == img.end()) return false;
        }
      }
    }
    return !r.extra || r.extra(a, h, img);
  };
  auto emb = embed_full_subgraph(d, h, opt);
  if (!emb) return std::nullopt;
  FamilyMatch m;
  m.family = f;
  m.embedding = *emb;
  for (int v = 0; v < d.size(); ++v) m.roles.push_back(h.role_of(m.embedding[v]));
  return m;
}

// Shapes a constituent D diagram may take inside d.
std::vector<StarShape> star_candidates(const Analysis& a) {
  std::vector<StarShape> out;
  for (int n : a.lengths) out.push_back({Star::kCycle, n});
  out.push_back({Star::kSquare, 0});
  out.push_back({Star::kDiag, 0});
  out.push_back({Star::kPerp, 0});
  return out;
}

// One way of reading a side of a split as a constituent diagram.
struct SideOption {
  bool is_b = false;
  StarShape star;
  bool z_core = false;
  std::vector<std::string> roles;  // per side vertex
  std::vector<int> xs;             // side-local x vertices
};

std::vector<SideOption> side_options(const Diagram& side, int z) {
  Analysis a(side);
  std::vector<SideOption> out;
  auto add = [&](const FamilyMatch& m, bool is_b, StarShape star, bool z_core) {
    SideOption o;
    o.is_b = is_b;
    o.star = star;
    o.z_core = z_core;
    o.roles = m.roles;
    for (int v = 0; v < side.size(); ++v) {
      if (has_role(m.roles[v], 'x')) o.xs.push_back(v);
    }
    out.push_back(std::move(o));
  };
  if (auto m = match_host(a, family_b(), true, Glue{z, false})) add(*m, true, {}, false);
  if (a.simply_laced() && a.cyclic) {
    for (const StarShape& s : star_candidates(a)) {
      for (bool core : {false, true}) {
        if (auto m = match_host(a, family_d(s), true, Glue{z, core})) add(*m, false, s, core);
      }
    }
  }
  return out;
}

int adjusted_width(FamilyKind kind, const FamilyId& f, int length) {
  switch (kind) {
    case FamilyKind::kBCommaB:
      return length - 1;
    case FamilyKind::kCCommaBB:
      return length - 2;
    case FamilyKind::kDComma:
      return f.first.kind == Star::kCycle && f.second.kind == Star::kCycle ? length : length - 1;
    default:
      throw InternalError(family_name(f) + " has no width");
  }
}

// Shortest path from any vertex of `from` to any vertex of `to`.
std::vector<int> shortest_path(const Diagram& d, const std::vector<int>& from,
                               const std::vector<int>& to) {
  std::vector<int> prev(d.size(), -2);
  std::deque<int> q;
  for (int v : from) {
    prev[v] = -1;
    q.push_back(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (std::find(to.begin(), to.end(), v) != to.end()) {
      std::vector<int> path;
      for (int u = v; u != -1; u = prev[u]) path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (int u : d.neighbors(v)) {
      if (prev[u] == -2) {
        prev[u] = v;
        q.push_back(u);
      }
    }
  }
  return {};
}

// All glued-family matches of d, one per family, keeping the smallest width.
std::vector<FamilyMatch> glued_matches(const Analysis& a) {
  const Diagram& d = a.d;
  const int n = d.size();
  std::map<FamilyId, FamilyMatch> best;
  if (!a.cyclic || a.w4 != 0 || a.other != 0 || a.w2 > 4) return {};

  std::map<std::vector<int>, std::vector<SideOption>> memo;
  auto options = [&](const std::vector<int>& verts, int z) -> const std::vector<SideOption>& {
    auto it = memo.find(verts);
    if (it != memo.end()) return it->second;
    int zl = static_cast<int>(std::find(verts.begin(), verts.end(), z) - verts.begin());
    return memo.emplace(verts, side_options(induced(d, verts), zl)).first->second;
  };

  for (int z = 0; z < n; ++z) {
    std::vector<int> comp(n, -1);
    int comps = 0;
    for (int s = 0; s < n; ++s) {
      if (s == z || comp[s] != -1) continue;
      std::vector<int> stack = {s};
      comp[s] = comps;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : d.neighbors(v)) {
          if (u != z && comp[u] == -1) {
            comp[u] = comps;
            stack.push_back(u);
          }
        }
      }
      ++comps;
    }
    if (comps < 2) continue;
    for (int mask = 1; mask < (1 << comps) - 1; ++mask) {
      std::array<std::vector<int>, 2> sides;
      for (int v = 0; v < n; ++v) {
        if (v == z) {
          sides[0].push_back(v);
          sides[1].push_back(v);
        } else {
          sides[(mask >> comp[v]) & 1 ? 0 : 1].push_back(v);
        }
      }
      const auto& left = options(sides[0], z);
      const auto& right = options(sides[1], z);
      for (const SideOption& l : left) {
        for (const SideOption& r : right) {
          FamilyId f;
          if (l.is_b && r.is_b) {
            f = {FamilyKind::kCCommaBB, {}, {}, 0};
          } else if (!l.is_b && r.is_b) {
            f = family_b_comma(l.star);
          } else if (!l.is_b && !r.is_b) {
            if (l.z_core && r.z_core) continue;
            // Keep the first shape on the unprimed side.
            if (r.star < l.star) continue;
            f = family_pair(FamilyKind::kDComma, l.star, r.star);
          } else {
            continue;  // B on the left is covered by the mirrored mask
          }
          FamilyMatch m;
          m.family = f;
          m.roles.assign(n, "");
          m.split = Split{z, sides};
          for (int s = 0; s < 2; ++s) {
            const SideOption& o = s == 0 ? l : r;
            for (std::size_t i = 0; i < sides[s].size(); ++i) {
              int v = sides[s][i];
              std::string role = s == 0 ? o.roles[i] : prime(o.roles[i]);
              if (role.empty()) continue;
              m.roles[v] = m.roles[v].empty() ? role : m.roles[v] + "=" + role;
            }
            for (int x : o.xs) m.ends[s].push_back(sides[s][x]);
          }
          m.witness = shortest_path(d, m.ends[0], m.ends[1]);
          m.width = adjusted_width(f.kind, f, static_cast<int>(m.witness.size()) - 1);
          // Two x vertices glued together form a vee diagram instead.
          if (*m.width < 0) continue;
          auto it = best.find(f);
          if (it == best.end() || *m.width < *it->second.width) best[f] = std::move(m);
        }
      }
    }
  }
  std::vector<FamilyMatch> out;
  for (auto& [f, m] : best) out.push_back(std::move(m));
  return out;
}

class Recognizer {
 public:
  explicit Recognizer(const Diagram& d) : a_(d) {}

  std::optional<FamilyMatch> match(const FamilyId& f) {
    if (!is_comma(f.kind)) {
      int need = vertices_for(family_type(f.kind), min_rank(family_type(f.kind)));
      if (a_.d.size() < need) return std::nullopt;
      return match_host(a_, f, false);
    }
    if (!glued_) glued_ = glued_matches(a_);
    for (const FamilyMatch& m : *glued_) {
      if (m.family == f) {
        int need = vertices_for(family_type(f.kind), min_rank(family_type(f.kind)));
        if (a_.d.size() < need) return std::nullopt;
        return m;
      }
    }
    return std::nullopt;
  }

  const Analysis& analysis() const { return a_; }

 private:
  Analysis a_;
  std::optional<std::vector<FamilyMatch>> glued_;
};

std::vector<FamilyId> candidates(const Analysis& a) {
  std::vector<FamilyId> out;
  std::vector<int> ns(a.lengths.begin(), a.lengths.end());
  const StarShape sq{Star::kSquare, 0}, dg{Star::kDiag, 0}, pp{Star::kPerp, 0};
  auto cyc = [](int n) { return StarShape{Star::kCycle, n}; };

  out.push_back(family_a());
  out.push_back(family_b());
  for (int n : ns) out.push_back(family_d(cyc(n)));
  for (const auto& s : {sq, dg, pp}) out.push_back(family_d(s));

  out.push_back(family_wedge(FamilyKind::kCWedgeBB));
  out.push_back({FamilyKind::kCCommaBB, {}, {}, 0});

  out.push_back(family_wedge(FamilyKind::kBSquareWedgeB));
  out.push_back(family_wedge(FamilyKind::kBDiagWedgeB));
  for (int n : ns) out.push_back(family_wedge(FamilyKind::kBCycleWedgeB, n));
  for (int n : ns) out.push_back(family_wedge(FamilyKind::kBCycleWedgeRevB, n));
  out.push_back(family_wedge(FamilyKind::kBDiagWedgeSquare));
  for (int n : ns) out.push_back(family_b_comma(cyc(n)));
  for (const auto& s : {sq, dg, pp}) out.push_back(family_b_comma(s));

  std::vector<StarShape> stars;
  for (int n : ns) stars.push_back(cyc(n));
  for (const auto& s : {sq, dg, pp}) stars.push_back(s);
  for (std::size_t i = 0; i < stars.size(); ++i) {
    for (std::size_t j = i; j < stars.size(); ++j) {
      out.push_back(family_pair(FamilyKind::kDVee, stars[i], stars[j]));
    }
  }
  for (int n : ns) out.push_back(family_wedge(FamilyKind::kDCycleWedgeSquare, n));
  for (int n : ns) out.push_back(family_wedge(FamilyKind::kDCycleWedgeDiag, n));
  for (int n : ns) out.push_back(family_wedge(FamilyKind::kDCycleWedgeRevDiag, n));
  out.push_back(family_wedge(FamilyKind::kDSquareWedgeSquare));
  out.push_back(family_wedge(FamilyKind::kDDiagWedgeDiag));
  out.push_back(family_wedge(FamilyKind::kDBoxTimes));
  for (std::size_t i = 0; i < stars.size(); ++i) {
    for (std::size_t j = i; j < stars.size(); ++j) {
      out.push_back(family_pair(FamilyKind::kDComma, stars[i], stars[j]));
    }
  }
  return out;
}

// Search state for embed_full_subgraph.
class Embedder {
 public:
  Embedder(const Diagram& g, const HostGraph& h)
      : g_(g), h_(h), map_(g.size(), -1), used_(h.size(), -1) {}

  void assign(int v, int hv) {
    map_[v] = hv;
    used_[hv] = v;
    placed_.push_back(v);
  }

  void unassign() {
    int v = placed_.back();
    placed_.pop_back();
    used_[map_[v]] = -1;
    map_[v] = -1;
  }

  bool consistent(int v, int hv) const {
    if (used_[hv] != -1 || g_.degree(v) > h_.degree(hv)) return false;
    for (int u : placed_) {
      if (h_.weight(hv, map_[u]) != g_.weight(v, u)) return false;
    }
    return true;
  }

  // Places the remaining vertices next to already placed neighbors.
  bool extend() {
    const int n = g_.size();
    order_.clear();
    std::vector<char> seen(n, 0);
    std::deque<int> q;
    for (int v : placed_) {
      seen[v] = 1;
      q.push_back(v);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u : g_.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          order_.emplace_back(u, v);
          q.push_back(u);
        }
      }
    }
    if (placed_.size() + order_.size() != static_cast<std::size_t>(n)) return false;
    return place(0);
  }

  const std::vector<int>& map() const { return map_; }

 private:
  bool place(std::size_t t) {
    if (t == order_.size()) return true;
    auto [v, parent] = order_[t];
    for (auto [hv, w] : h_.adj[map_[parent]]) {
      if (w != g_.weight(v, parent) || !consistent(v, hv)) continue;
      assign(v, hv);
      if (place(t + 1)) return true;
      unassign();
    }
    return false;
  }

  const Diagram& g_;
  const HostGraph& h_;
  std::vector<int> map_;
  std::vector<int> used_;
  std::vector<int> placed_;
  std::vector<std::pair<int, int>> order_;
};

}  // namespace

int FamilyMatch::n() const {
  if (family.first.kind == Star::kCycle && family.first.n > 0) return family.first.n;
  return family.n;
}

int FamilyMatch::m() const {
  return family.second.kind == Star::kCycle ? family.second.n : 0;
}

std::optional<std::vector<int>> embed_full_subgraph(const Diagram& g, const HostGraph& host,
                                                    const EmbedOptions& options) {
  const int n = g.size();
  if (n == 0) return std::vector<int>{};
  const std::vector<int> req = options.required ? *options.required : host.core;
  if (static_cast<int>(req.size()) > n) return std::nullopt;
  Embedder e(g, host);

  if (req.empty()) {
    int anchor = options.anchor.value_or(host.center);
    if (!e.consistent(0, anchor)) return std::nullopt;
    e.assign(0, anchor);
    if (options.accept && !options.accept({0})) return std::nullopt;
    if (e.extend()) return e.map();
    return std::nullopt;
  }

  // Earlier required vertex adjacent to each required vertex, if any.
  std::vector<int> parent(req.size(), -1);
  for (std::size_t i = 1; i < req.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (host.weight(req[i], req[j]) != 0) {
        parent[i] = static_cast<int>(j);
        break;
      }
    }
  }
  std::vector<int> image(req.size(), -1);
  std::vector<int> all(n);
  for (int v = 0; v < n; ++v) all[v] = v;

  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == req.size()) {
      if (options.accept && !options.accept(image)) return false;
      return e.extend();
    }
    std::vector<int> cands = parent[i] == -1 ? all : g.neighbors(image[parent[i]]);
    for (int v : cands) {
      if (e.map()[v] != -1 || !e.consistent(v, req[i])) continue;
      e.assign(v, req[i]);
      image[i] = v;
      if (self(self, i + 1)) return true;
      e.unassign();
    }
    return false;
  };
  if (place(place, 0)) return e.map();
  return std::nullopt;
}

std::vector<FamilyId> candidate_families(const Diagram& d) { return candidates(Analysis(d)); }

std::optional<FamilyMatch> recognize(const Diagram& d, const FamilyId& family) {
  return Recognizer(d).match(family);
}

std::vector<FamilyMatch> match_all(const Diagram& d) {
  Recognizer r(d);
  std::vector<FamilyMatch> out;
  for (const FamilyId& f : candidates(r.analysis())) {
    if (auto m = r.match(f)) out.push_back(std::move(*m));
  }
  return out;
}

Classification classify(const Diagram& d) {
  Recognizer r(d);
  for (const FamilyId& f : candidates(r.analysis())) {
    if (auto m = r.match(f)) {
      TypeKind t = family_type(f.kind);
      return {{t, rank_for(t, d.size())}, std::move(m)};
    }
  }
  return {};
}

std::string prime(const std::string& roles) {
  static constexpr std::string_view kBullet = "•";
  std::string out;
  for (std::string part : role_parts(roles)) {
    std::size_t head = part.starts_with(kBullet) ? kBullet.size() : 1;
    part.insert(std::min(head, part.size()), "'");
    if (!out.empty()) out += '=';
    out += part;
  }
  return out;
}

std::vector<std::string> role_parts(const std::string& roles) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < roles.size()) {
    std::size_t end = roles.find('=', start);
    if (end == std::string::npos) end = roles.size();
    if (end > start) out.push_back(roles.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int width(const Diagram& d, const FamilyMatch& match) {
  if (!is_comma(match.family.kind)) throw InternalError(family_name(match.family) + " has no width");
  if (match.ends[0].empty() || match.ends[1].empty()) throw InternalError("glued match without ends");
  auto path = shortest_path(d, match.ends[0], match.ends[1]);
  if (path.empty()) throw InternalError("glued match with unreachable ends");
  return adjusted_width(match.family.kind, match.family, static_cast<int>(path.size()) - 1);
}

}  // namespace mutclass
