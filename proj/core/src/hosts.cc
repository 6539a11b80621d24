#include "mutclass/hosts.h"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace mutclass {
namespace {

std::string idx(std::string_view base, int i) { return std::string(base) + std::to_string(i); }

class Builder {
 public:
  int named(const std::string& role) {
    auto it = role_.find(role);
    if (it != role_.end()) return it->second;
    int v = static_cast<int>(names_.size());
    names_.push_back(role);
    role_.emplace(role, v);
    return v;
  }

  void alias(const std::string& role, int v) { role_.emplace(role, v); }

  void edge(int u, int v, Weight w = 1) {
    if (u > v) std::swap(u, v);
    edges_[{u, v}] = w;
  }

  void nabla(int root, Weight w = 1) { nablas_.emplace_back(root, w); }

  void core(std::vector<int> vs) { core_ = std::move(vs); }

  HostGraph finish(const FamilyId& family, int depth, int center = 0) {
    const int n = static_cast<int>(names_.size());
    std::vector<std::vector<int>> sk(n);
    for (const auto& [e, w] : edges_) {
      sk[e.first].push_back(e.second);
      sk[e.second].push_back(e.first);
    }
    std::vector<int> dist(n, -1);
    std::deque<int> queue;
    std::vector<int> sources = core_.empty() ? std::vector<int>{center} : core_;
    for (int s : sources) {
      dist[s] = 0;
      queue.push_back(s);
    }
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : sk[v]) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }

    HostGraph h;
    h.family = family;
    h.depth = depth;
    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v) {
      if (dist[v] != -1 && dist[v] <= depth) {
        remap[v] = h.size();
        h.names.push_back(names_[v]);
      }
    }
    h.adj.resize(h.names.size());
    auto link = [&h](int u, int v, Weight w) {
      h.adj[u].emplace_back(v, w);
      h.adj[v].emplace_back(u, w);
    };
    for (const auto& [e, w] : edges_) {
      if (remap[e.first] != -1 && remap[e.second] != -1) link(remap[e.first], remap[e.second], w);
    }
    for (const auto& [root, w] : nablas_) {
      if (remap[root] == -1) continue;
      grow(h, remap[root], names_[root] + "/", depth - dist[root], w);
    }
    for (auto& nb : h.adj) std::sort(nb.begin(), nb.end());

    for (const auto& [role, v] : role_) {
      if (remap[v] != -1) h.roles.emplace_back(role, remap[v]);
    }
    std::sort(h.roles.begin(), h.roles.end());
    h.center = remap[center] == -1 ? 0 : remap[center];

    // Core in BFS order over core-internal edges.
    std::vector<int> core;
    for (int c : core_) core.push_back(remap[c]);
    std::vector<char> in_core(h.size(), 0), seen(h.size(), 0);
    for (int c : core) in_core[c] = 1;
    for (int start : core) {
      if (seen[start]) continue;
      seen[start] = 1;
      std::deque<int> q{start};
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        h.core.push_back(v);
        for (auto [u, w] : h.adj[v]) {
          if (in_core[u] && !seen[u]) {
            seen[u] = 1;
            q.push_back(u);
          }
        }
      }
    }
    return h;
  }

 private:
  static void grow(HostGraph& h, int root, const std::string& prefix, int levels, Weight w) {
    if (levels <= 0) return;
    int c[2];
    for (int i = 0; i < 2; ++i) {
      c[i] = h.size();
      h.names.push_back(prefix + static_cast<char>('0' + i));
      h.adj.emplace_back();
      h.adj[root].emplace_back(c[i], w);
      h.adj[c[i]].emplace_back(root, w);
    }
    h.adj[c[0]].emplace_back(c[1], 1);
    h.adj[c[1]].emplace_back(c[0], 1);
    for (int i = 0; i < 2; ++i) grow(h, c[i], h.names[c[i]], levels - 1, 1);
  }

  std::vector<std::string> names_;
  std::map<std::string, int> role_;
  std::map<std::pair<int, int>, Weight> edges_;
  std::vector<std::pair<int, Weight>> nablas_;
  std::vector<int> core_;
};

// Cycle a1..an with x_i joined to a_i and a_{i+1}; nabla graphs on the x_i
// listed in `with_nabla`.
void cycle_skeleton(Builder& b, int n, std::string_view prime, const std::vector<bool>& with_nabla) {
  std::string a(std::string("a") + std::string(prime));
  std::string x(std::string("x") + std::string(prime));
  for (int i = 1; i <= n; ++i) b.named(idx(a, i));
  for (int i = 1; i <= n; ++i) {
    int xi = b.named(idx(x, i));
    b.edge(b.named(idx(a, i)), b.named(idx(a, i % n + 1)));
    b.edge(xi, b.named(idx(a, i)));
    b.edge(xi, b.named(idx(a, i % n + 1)));
    if (with_nabla[i - 1]) b.nabla(xi);
  }
}

// x1, x2 joined to a1, a2 (plus x1x2 for the diagonal); nabla graphs at both.
std::vector<int> square_skeleton(Builder& b, bool diag, std::string_view prime,
                                 bool nabla_x1 = true) {
  std::string p(prime);
  int x1 = b.named("x" + p + "1"), x2 = b.named("x" + p + "2");
  int a1 = b.named("a" + p + "1"), a2 = b.named("a" + p + "2");
  for (int x : {x1, x2}) {
    for (int a : {a1, a2}) b.edge(x, a);
  }
  if (diag) b.edge(x1, x2);
  if (nabla_x1) b.nabla(x1);
  b.nabla(x2);
  return {x1, a1, x2, a2};
}

void check_cycle(int n, int min) {
  if (n < min) throw std::invalid_argument("cycle length " + std::to_string(n) + " below " +
                                           std::to_string(min));
}

// One constituent of a vee host with x1 (x'1) renamed to the shared vertex.
std::vector<int> vee_side(Builder& b, const StarShape& s, std::string_view prime, int bullet) {
  std::string p(prime);
  b.alias("x" + p + "1", bullet);
  std::vector<int> core;
  switch (s.kind) {
    case Star::kCycle: {
      check_cycle(s.n, 3);
      for (int i = 1; i <= s.n; ++i) core.push_back(b.named(idx("a" + p, i)));
      for (int i = 1; i <= s.n; ++i) {
        int ai = core[i - 1], an = core[i % s.n];
        b.edge(ai, an);
        int xi = i == 1 ? bullet : b.named(idx("x" + p, i));
        b.edge(xi, ai);
        b.edge(xi, an);
        if (i != 1) b.nabla(xi);
      }
      break;
    }
    case Star::kSquare:
    case Star::kDiag: {
      int x2 = b.named("x" + p + "2");
      int a1 = b.named("a" + p + "1"), a2 = b.named("a" + p + "2");
      for (int x : {bullet, x2}) {
        for (int a : {a1, a2}) b.edge(x, a);
      }
      if (s.kind == Star::kDiag) b.edge(bullet, x2);
      b.nabla(x2);
      core = {bullet, a1, x2, a2};
      break;
    }
    case Star::kPerp: {
      int a1 = b.named("a" + p + "1"), a2 = b.named("a" + p + "2");
      b.edge(bullet, a1);
      b.edge(bullet, a2);
      core = {bullet, a1, a2};
      break;
    }
  }
  return core;
}

HostGraph build_cycle_vee(const FamilyId& f, int depth) {
  const int n = f.first.n, m = f.second.n;
  check_cycle(n, 3);
  check_cycle(m, 3);
  Builder b;
  std::vector<bool> nabla(n, true);
  nabla[0] = nabla[1] = false;
  cycle_skeleton(b, n, "", nabla);
  int bullet = b.named("a2");
  b.alias("•", bullet);
  b.alias("a'2", bullet);
  b.alias("a'1", b.named("x1"));
  b.alias("a'3", b.named("x2"));
  b.alias("x'1", b.named("a1"));
  b.alias("x'2", b.named("a3"));
  std::vector<int> ring = {b.named("x1"), bullet, b.named("x2")};
  for (int j = 4; j <= m; ++j) ring.push_back(b.named(idx("a'", j)));
  for (int j = 1; j <= m; ++j) {
    int aj = ring[j - 1], an = ring[j % m];
    b.edge(aj, an);
    if (j >= 3) {
      int xj = b.named(idx("x'", j));
      b.edge(xj, aj);
      b.edge(xj, an);
      b.nabla(xj);
    }
  }
  std::vector<int> core;
  for (int i = 1; i <= n; ++i) core.push_back(b.named(idx("a", i)));
  core.push_back(ring[0]);
  core.push_back(ring[2]);
  for (int j = 4; j <= m; ++j) core.push_back(ring[j - 1]);
  b.core(core);
  return b.finish(f, depth);
}

// Path a1..a_{n-1} with x_i on consecutive pairs, closed into a square
// •1 a'1 •2 a'2 with •1 = a_{n-1}, •2 = a1.
HostGraph build_cycle_wedge(const FamilyId& f, int path_n, bool close, int depth) {
  check_cycle(path_n, 3);
  Builder b;
  std::vector<int> path;
  for (int i = 1; i <= path_n - 1; ++i) path.push_back(b.named(idx("a", i)));
  for (int i = 1; i <= path_n - 2; ++i) {
    int xi = b.named(idx("x", i));
    b.edge(path[i - 1], path[i]);
    b.edge(xi, path[i - 1]);
    b.edge(xi, path[i]);
    b.nabla(xi);
  }
  int b1 = path.back(), b2 = path.front();
  b.alias("•1", b1);
  b.alias("•2", b2);
  int p1 = b.named("a'1"), p2 = b.named("a'2");
  for (int p : {p1, p2}) {
    b.edge(p, b1);
    b.edge(p, b2);
  }
  if (close) b.edge(b1, b2);
  std::vector<int> core = path;
  core.push_back(p1);
  core.push_back(p2);
  b.core(core);
  return b.finish(f, depth);
}

}  // namespace

int HostGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nb : adj) total += nb.size();
  return static_cast<int>(total / 2);
}

Weight HostGraph::weight(int u, int v) const {
  const auto& nb = adj[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), std::make_pair(v, Weight{0}));
  return it != nb.end() && it->first == v ? it->second : 0;
}

std::optional<int> HostGraph::vertex(std::string_view role) const {
  auto it = std::lower_bound(roles.begin(), roles.end(), role,
                             [](const auto& r, std::string_view key) { return r.first < key; });
  if (it == roles.end() || it->first != role) return std::nullopt;
  return it->second;
}

bool HostGraph::is_core(int v) const { return std::find(core.begin(), core.end(), v) != core.end(); }

std::string HostGraph::role_of(int v) const {
  std::string out;
  for (const auto& [role, u] : roles) {
    if (u != v) continue;
    if (!out.empty()) out += '=';
    out += role;
  }
  return out;
}

Diagram HostGraph::as_diagram() const {
  Diagram d(names);
  for (int u = 0; u < size(); ++u) {
    for (auto [v, w] : adj[u]) {
      if (u < v) d.add_edge(u, v, w);
    }
  }
  return d;
}

HostGraph build_nabla(int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  Builder b;
  int x = b.named("x");
  b.nabla(x);
  b.core({x});
  return b.finish(family_a(), depth);
}

HostGraph build_host(const FamilyId& f, int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  if (is_comma(f.kind)) {
    throw UnsupportedFamily(family_name(f) + " is glued from two diagrams and has no host graph");
  }
  Builder b;
  switch (f.kind) {
    case FamilyKind::kA: {
      int x = b.named("x");
      b.nabla(x);
      b.nabla(x);
      return b.finish(f, depth, x);
    }
    case FamilyKind::kB: {
      int x = b.named("x");
      b.nabla(x, 2);
      b.core({x});
      break;
    }
    case FamilyKind::kD:
      switch (f.first.kind) {
        case Star::kCycle: {
          check_cycle(f.first.n, 3);
          cycle_skeleton(b, f.first.n, "", std::vector<bool>(f.first.n, true));
          std::vector<int> core;
          for (int i = 1; i <= f.first.n; ++i) core.push_back(b.named(idx("a", i)));
          b.core(core);
          break;
        }
        case Star::kSquare:
        case Star::kDiag:
          b.core(square_skeleton(b, f.first.kind == Star::kDiag, ""));
          break;
        case Star::kPerp: {
          int x1 = b.named("x1"), a1 = b.named("a1"), a2 = b.named("a2");
          b.edge(x1, a1);
          b.edge(x1, a2);
          b.nabla(x1);
          b.core({x1, a1, a2});
          break;
        }
      }
      break;
    case FamilyKind::kBSquareWedgeB:
    case FamilyKind::kBDiagWedgeB:
    case FamilyKind::kBDiagWedgeSquare: {
      bool diag = f.kind == FamilyKind::kBDiagWedgeB;
      auto core = square_skeleton(b, diag, "", false);
      int x1 = b.named("x1"), x2 = b.named("x2");
      b.edge(x1, b.named("a1"), 2);
      b.edge(x1, b.named("a2"), 2);
      if (diag) b.edge(x1, x2, 2);
      if (f.kind == FamilyKind::kBDiagWedgeSquare) b.edge(b.named("a1"), b.named("a2"), 4);
      b.core(core);
      break;
    }
    case FamilyKind::kBCycleWedgeB:
    case FamilyKind::kBCycleWedgeRevB: {
      check_cycle(f.n, 3);
      std::vector<bool> nabla(f.n, true);
      nabla[0] = false;
      cycle_skeleton(b, f.n, "", nabla);
      int x1 = b.named("x1");
      b.edge(x1, b.named("a1"), 2);
      b.edge(x1, b.named("a2"), 2);
      std::vector<int> core;
      for (int i = 1; i <= f.n; ++i) core.push_back(b.named(idx("a", i)));
      core.push_back(x1);
      b.core(core);
      break;
    }
    case FamilyKind::kCWedgeBB: {
      int bullet = b.named("•"), x1 = b.named("x1"), x2 = b.named("x2");
      b.edge(x1, bullet, 2);
      b.edge(x2, bullet, 2);
      b.edge(x1, x2, 4);
      b.nabla(bullet);
      b.core({bullet, x1, x2});
      break;
    }
    case FamilyKind::kDVee: {
      if (f.first.kind == Star::kCycle && f.second.kind == Star::kCycle) {
        return build_cycle_vee(f, depth);
      }
      int bullet = b.named("•");
      auto c1 = vee_side(b, f.first, "", bullet);
      auto c2 = vee_side(b, f.second, "'", bullet);
      std::vector<int> core = c1;
      for (int v : c2) {
        if (std::find(core.begin(), core.end(), v) == core.end()) core.push_back(v);
      }
      b.core(core);
      break;
    }
    case FamilyKind::kDCycleWedgeSquare:
      return build_cycle_wedge(f, f.n, false, depth);
    case FamilyKind::kDCycleWedgeDiag:
    case FamilyKind::kDCycleWedgeRevDiag:
      return build_cycle_wedge(f, f.n + 1, true, depth);
    case FamilyKind::kDSquareWedgeSquare:
    case FamilyKind::kDDiagWedgeDiag: {
      int x1 = b.named("x1"), x2 = b.named("x2");
      int a1 = b.named("a1"), a2 = b.named("a2");
      int bullet = b.named("•");
      for (int x : {x1, x2}) {
        b.edge(x, a1);
        b.edge(x, a2);
        b.edge(x, bullet);
      }
      if (f.kind == FamilyKind::kDDiagWedgeDiag) b.edge(x1, x2, 4);
      b.nabla(bullet);
      b.core({x1, a1, x2, a2, bullet});
      break;
    }
    case FamilyKind::kDBoxTimes: {
      int x1 = b.named("x1");
      std::vector<int> core = {x1};
      for (int i = 1; i <= 4; ++i) core.push_back(b.named(idx("a", i)));
      for (int i = 1; i <= 4; ++i) {
        b.edge(core[i], core[i % 4 + 1]);
        b.edge(x1, core[i]);
      }
      b.nabla(x1);
      b.core(core);
      break;
    }
    default:
      throw UnsupportedFamily(family_name(f));
  }
  return b.finish(f, depth);
}

std::shared_ptr<const HostGraph> cached_host(const FamilyId& family, int depth) {
  static std::mutex mu;
  static std::map<std::pair<FamilyId, int>, std::shared_ptr<const HostGraph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{family, depth}];
  if (!slot) slot = std::make_shared<const HostGraph>(build_host(family, depth));
  return slot;
}

std::string to_dot(const HostGraph& host) {
  std::ostringstream out;
  out << "graph \"" << family_name(host.family) << "\" {\n";
  for (int v = 0; v < host.size(); ++v) {
    out << "  v" << v << " [label=\"" << host.names[v] << "\"";
    if (host.is_core(v)) out << ", shape=box";
    out << "];\n";
  }
  for (int u = 0; u < host.size(); ++u) {
    for (auto [v, w] : host.adj[u]) {
      if (u > v) continue;
      out << "  v" << u << " -- v" << v;
      if (w == 4) {
        out << " [color=\"black:black\"]";
      } else if (w != 1) {
        out << " [label=\"" << w << "\"]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace mutclass
