#include "mutclass/diagram.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace mutclass {
namespace {

using i128 = __int128;

i128 isqrt128(i128 v) {
  if (v <= 0) return 0;
  auto r = static_cast<i128>(std::sqrt(static_cast<long double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

i128 gcd128(i128 a, i128 b) {
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Square-free part of w, so a product is a square iff the product of the
// square-free parts (with squares cancelled) is 1.
i128 squarefree(Weight w) {
  i128 out = 1;
  Weight rest = w;
  for (Weight p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  return out * rest;
}

i128 kernel_product(i128 a, i128 b) {
  i128 g = gcd128(a, b);
  return (a / g) * (b / g);
}

std::string join_ids(const Diagram& d, const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += d.id(vs[i]);
  }
  return s;
}

class SimpleCycleScan {
 public:
  SimpleCycleScan(const Diagram& d, std::size_t cap) : d_(d), cap_(cap) {
    int n = d.size();
    kernel_.assign(n * n, 1);
    adj_.resize(n);
    for (const Edge& e : d.edges()) {
      i128 k = squarefree(e.weight);
      kernel_[e.tail * n + e.head] = k;
      kernel_[e.head * n + e.tail] = k;
      adj_[e.tail].push_back(e.head);
      adj_[e.head].push_back(e.tail);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  void run(std::vector<Violation>& out) {
    int n = d_.size();
    on_path_.assign(n, false);
    for (int s = 0; s < n && !aborted_; ++s) {
      path_ = {s};
      on_path_[s] = true;
      extend(s, 1, out);
      on_path_[s] = false;
    }
    if (aborted_) {
      out.push_back({ViolationKind::kValidationIncomplete,
                     "validation incomplete: more than " + std::to_string(cap_) +
                         " simple cycles",
                     {}});
    }
  }

 private:
  void extend(int s, i128 kernel, std::vector<Violation>& out) {
    int n = d_.size();
    int v = path_.back();
    for (int w : adj_[v]) {
      if (aborted_) return;
      if (w == s && path_.size() >= 3 && path_[1] < v) {
        if (++cycles_ > cap_) {
          aborted_ = true;
          return;
        }
        i128 k = kernel_product(kernel, kernel_[v * n + s]);
        if (k != 1 && reported_ < 16) {
          ++reported_;
          out.push_back({ViolationKind::kNonSquareCycle,
                         "cycle product not a perfect square: " + join_ids(d_, path_),
                         path_});
        }
        continue;
      }
      if (w <= s || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(s, kernel_product(kernel, kernel_[v * n + w]), out);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  const Diagram& d_;
  std::size_t cap_;
  std::vector<i128> kernel_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> path_;
  std::vector<bool> on_path_;
  std::size_t cycles_ = 0;
  int reported_ = 0;
  bool aborted_ = false;
};

bool linked(const Diagram& d, int i, int j, const std::optional<VertexPair>& excluded) {
  if (!d.adjacent(i, j)) return false;
  if (excluded && ((excluded->first == i && excluded->second == j) ||
                   (excluded->first == j && excluded->second == i))) {
    return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kSelfLoop:
      return "self-loop";
    case ViolationKind::kDuplicateEdge:
      return "duplicate edge";
    case ViolationKind::kNonPositiveWeight:
      return "non-positive weight";
    case ViolationKind::kNonSquareCycle:
      return "non-square cycle";
    case ViolationKind::kValidationIncomplete:
      return "validation incomplete";
  }
  return "unknown";
}

Diagram::Diagram(int n) : n_(n), labels_(n), m_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  ids_.reserve(n);
  for (int i = 0; i < n; ++i) ids_.push_back(std::to_string(i));
}

Diagram::Diagram(std::vector<std::string> ids)
    : n_(static_cast<int>(ids.size())),
      ids_(std::move(ids)),
      labels_(n_),
      m_(static_cast<std::size_t>(n_) * n_, 0) {}

void Diagram::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex index " + std::to_string(v));
}

void Diagram::add_edge(int tail, int head, Weight weight) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) {
    defects_.push_back({ViolationKind::kSelfLoop, "self-loop at " + ids_[tail], {tail}});
    return;
  }
  if (weight < 1) {
    defects_.push_back({ViolationKind::kNonPositiveWeight,
                        "non-positive weight " + std::to_string(weight) + " on " +
                            ids_[tail] + "->" + ids_[head],
                        {tail, head}});
    return;
  }
  if (m_[tail * n_ + head] != 0) {
    defects_.push_back({ViolationKind::kDuplicateEdge,
                        "more than one edge between " + ids_[tail] + " and " + ids_[head],
                        {tail, head}});
    return;
  }
  m_[tail * n_ + head] = weight;
  m_[head * n_ + tail] = -weight;
}

void Diagram::add_edges(std::span<const Edge> edges) {
  for (const Edge& e : edges) add_edge(e.tail, e.head, e.weight);
}

std::optional<int> Diagram::index_of(std::string_view id) const {
  for (int i = 0; i < n_; ++i) {
    if (ids_[i] == id) return i;
  }
  return std::nullopt;
}

void Diagram::set_label(int v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

bool Diagram::has_labels() const {
  return std::any_of(labels_.begin(), labels_.end(),
                     [](const std::string& l) { return !l.empty(); });
}

std::vector<Edge> Diagram::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      Weight a = arrow(i, j);
      if (a > 0) out.push_back({i, j, a});
      if (a < 0) out.push_back({j, i, -a});
    }
  }
  return out;
}

int Diagram::edge_count() const {
  int c = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) c += adjacent(i, j);
  }
  return c;
}

std::vector<int> Diagram::neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

int Diagram::degree(int v) const {
  check_vertex(v);
  int c = 0;
  for (int u = 0; u < n_; ++u) c += adjacent(v, u);
  return c;
}

int Diagram::in_degree(int v) const {
  check_vertex(v);
  int c = 0;
  for (int u = 0; u < n_; ++u) c += arrow(u, v) > 0;
  return c;
}

bool operator==(const Diagram& a, const Diagram& b) {
  return a.n_ == b.n_ && a.ids_ == b.ids_ && a.labels_ == b.labels_ && a.m_ == b.m_;
}

UnderlyingGraph underlying(const Diagram& d) {
  UnderlyingGraph g{d.ids(), {}};
  for (const Edge& e : d.edges()) {
    g.edges.push_back({std::min(e.tail, e.head), std::max(e.tail, e.head), e.weight});
  }
  return g;
}

std::vector<Violation> validate(const Diagram& d, const ValidateOptions& options) {
  std::vector<Violation> out = d.structural_defects();
  SimpleCycleScan(d, options.max_cycles).run(out);
  return out;
}

Diagram mutate(const Diagram& d, int k) {
  d.check_vertex(k);
  const int n = d.n_;
  Diagram out = d;
  for (int i = 0; i < n; ++i) {
    const Weight a = d.arrow(i, k);
    if (a <= 0) continue;
    for (int j = 0; j < n; ++j) {
      const Weight b = d.arrow(k, j);
      if (b <= 0 || j == i) continue;
      const Weight c = d.weight(i, j);
      const int s = d.arrow(j, i) > 0 ? 1 : -1;
      const i128 ab = static_cast<i128>(a) * b;
      const i128 abc = ab * c;
      const i128 r = isqrt128(abc);
      if (r * r != abc) {
        throw MutationDomainError("weights around " + d.id(k) + " have non-square product");
      }
      const i128 next = ab + c - 2 * s * r;
      if (next < 0 || next > INT64_MAX) {
        throw MutationDomainError("mutation at " + d.id(k) + " leaves the integer domain");
      }
      Weight signed_next = static_cast<Weight>(next);
      if (s == 1 && ab < c) signed_next = -signed_next;
      out.m_[i * n + j] = signed_next;
      out.m_[j * n + i] = -signed_next;
    }
  }
  for (int u = 0; u < n; ++u) {
    out.m_[k * n + u] = -d.m_[k * n + u];
    out.m_[u * n + k] = -d.m_[u * n + k];
  }
  return out;
}

Diagram mutate(const Diagram& d, std::string_view vertex_id) {
  auto k = d.index_of(vertex_id);
  if (!k) throw std::out_of_range("unknown vertex " + std::string(vertex_id));
  return mutate(d, *k);
}

Diagram permute(const Diagram& d, std::span<const int> order) {
  const int n = d.n_;
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("permutation size");
  Diagram out(n);
  for (int p = 0; p < n; ++p) {
    out.ids_[p] = d.ids_[order[p]];
    out.labels_[p] = d.labels_[order[p]];
    for (int q = 0; q < n; ++q) out.m_[p * n + q] = d.m_[order[p] * n + order[q]];
  }
  return out;
}

Diagram induced(const Diagram& d, std::span<const int> vertices) {
  const int m = static_cast<int>(vertices.size());
  Diagram out(m);
  for (int p = 0; p < m; ++p) {
    d.check_vertex(vertices[p]);
    out.ids_[p] = d.ids_[vertices[p]];
    out.labels_[p] = d.labels_[vertices[p]];
    for (int q = 0; q < m; ++q) {
      out.m_[p * m + q] = d.m_[vertices[p] * d.n_ + vertices[q]];
    }
  }
  return out;
}

std::vector<std::vector<int>> chordless_cycles(const Diagram& d,
                                               std::optional<VertexPair> excluded) {
  const int n = d.size();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) adj[i * n + j] = i != j && linked(d, i, j, excluded);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on_path(n, 0);

  // Extends an induced path s, v1, ..., vk whose inner vertices avoid s.
  auto extend = [&](auto&& self, int s) -> void {
    const int v = path.back();
    for (int w = s + 1; w < n; ++w) {
      if (!adj[v * n + w] || on_path[w]) continue;
      bool chord = false;
      for (std::size_t p = 1; p + 1 < path.size(); ++p) {
        if (adj[path[p] * n + w]) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (adj[s * n + w]) {
        if (path.size() >= 2 && path[1] < w) {
          std::vector<int> cyc = path;
          cyc.push_back(w);
          std::sort(cyc.begin(), cyc.end());
          out.push_back(std::move(cyc));
        }
        continue;
      }
      on_path[w] = 1;
      path.push_back(w);
      self(self, s);
      path.pop_back();
      on_path[w] = 0;
    }
  };

  for (int s = 0; s < n; ++s) {
    for (int v1 = s + 1; v1 < n; ++v1) {
      if (!adj[s * n + v1]) continue;
      path = {s, v1};
      on_path[s] = on_path[v1] = 1;
      extend(extend, s);
      on_path[s] = on_path[v1] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_directed_cycle(const Diagram& d, std::span<const int> cycle,
                       std::optional<VertexPair> excluded) {
  for (int v : cycle) {
    int in = 0;
    int out = 0;
    for (int u : cycle) {
      if (u == v || !linked(d, u, v, excluded)) continue;
      if (d.arrow(u, v) > 0) {
        ++in;
      } else {
        ++out;
      }
    }
    if (in != 1 || out != 1) return false;
  }
  return true;
}

bool is_cyclically_oriented(const Diagram& d, std::optional<VertexPair> excluded) {
  for (const auto& cyc : chordless_cycles(d, excluded)) {
    if (!is_directed_cycle(d, cyc, excluded)) return false;
  }
  return true;
}

bool is_simply_laced(const Diagram& d) {
  for (const Edge& e : d.edges()) {
    if (e.weight != 1) return false;
  }
  return true;
}

bool is_connected(const Diagram& d) {
  const int n = d.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u) {
      if (!seen[u] && d.adjacent(v, u)) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

std::int64_t isqrt(std::int64_t v) { return static_cast<std::int64_t>(isqrt128(v)); }

}  // namespace mutclass
