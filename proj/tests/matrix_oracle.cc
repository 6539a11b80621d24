#include "matrix_oracle.h"

#include <algorithm>
#include <numeric>
#include <utility>

namespace mutclass::testing {
namespace {

using Ratio = std::pair<std::int64_t, std::int64_t>;

Ratio reduce(std::int64_t num, std::int64_t den) {
  std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::int64_t sgn(std::int64_t v) { return (v > 0) - (v < 0); }

struct Realizer {
  const Diagram& d;
  std::vector<Edge> edges;
  std::vector<std::optional<Ratio>> scale;
  Matrix b;

  bool place(std::size_t e) {
    if (e == edges.size()) return true;
    const Edge& ed = edges[e];
    int i = ed.tail;
    int j = ed.head;
    auto set = [&](std::int64_t p, std::int64_t q) {
      b[i][j] = p;
      b[j][i] = -q;
    };
    if (!scale[i] && !scale[j]) scale[i] = Ratio{1, 1};
    if (scale[i] && scale[j]) {
      // d_i * p = d_j * q, so p : q = d_j : d_i.
      Ratio r = reduce(scale[j]->first * scale[i]->second, scale[j]->second * scale[i]->first);
      std::int64_t uv = r.first * r.second;
      if (ed.weight % uv != 0) return false;
      std::int64_t t2 = ed.weight / uv;
      std::int64_t t = isqrt(t2);
      if (t * t != t2) return false;
      set(t * r.first, t * r.second);
      return place(e + 1);
    }
    bool forward = scale[i].has_value();
    int known = forward ? i : j;
    int fresh = forward ? j : i;
    for (std::int64_t p = 1; p <= ed.weight; ++p) {
      if (ed.weight % p != 0) continue;
      std::int64_t q = ed.weight / p;
      set(p, q);
      // d_i p = d_j q.
      if (forward) {
        scale[fresh] = reduce(scale[known]->first * p, scale[known]->second * q);
      } else {
        scale[fresh] = reduce(scale[known]->first * q, scale[known]->second * p);
      }
      if (place(e + 1)) return true;
      scale[fresh].reset();
    }
    return false;
  }
};

}  // namespace

Diagram make_diagram(int n, std::initializer_list<Edge> edges) {
  Diagram d(n);
  for (const Edge& e : edges) d.add_edge(e.tail, e.head, e.weight);
  return d;
}

Matrix matrix_mutate(const Matrix& b, int k) {
  const int n = static_cast<int>(b.size());
  Matrix out = b;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        out[i][j] = b[i][j] + sgn(b[i][k]) * std::max<std::int64_t>(0, b[i][k] * b[k][j]);
      }
    }
  }
  return out;
}

Diagram diagram_of(const Matrix& b) {
  const int n = static_cast<int>(b.size());
  Diagram d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (b[i][j] > 0) d.add_edge(i, j, b[i][j] * -b[j][i]);
    }
  }
  return d;
}

std::optional<Matrix> realize(const Diagram& d) {
  const int n = d.size();
  Realizer r{d, {}, std::vector<std::optional<Ratio>>(n), Matrix(n, std::vector<std::int64_t>(n, 0))};
  // Breadth-first edge order so every edge after the first in a component
  // has a scaled endpoint.
  std::vector<char> seen(n, 0);
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<int> queue = {root};
    seen[root] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int v = queue[h];
      for (int u : d.neighbors(v)) {
        if (!used[v * n + u]) {
          used[v * n + u] = used[u * n + v] = 1;
          Weight a = d.arrow(v, u);
          r.edges.push_back(a > 0 ? Edge{v, u, a} : Edge{u, v, -a});
        }
        if (!seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
      }
    }
  }
  if (!r.place(0)) return std::nullopt;
  return r.b;
}

Matrix random_skew_symmetrizable(std::mt19937_64& rng, int n, double density, int max_entry) {
  std::uniform_int_distribution<int> scale_pick(1, 2);
  std::uniform_int_distribution<int> mag(1, max_entry);
  std::bernoulli_distribution edge(density);
  std::bernoulli_distribution flip(0.5);
  std::vector<std::int64_t> dd(n);
  for (auto& v : dd) v = scale_pick(rng);
  Matrix b(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!edge(rng)) continue;
      // d_i b_ij = -d_j b_ji: take b_ij a multiple of d_j / gcd.
      std::int64_t g = std::gcd(dd[i], dd[j]);
      std::int64_t bij = mag(rng) * (dd[j] / g);
      if (flip(rng)) bij = -bij;
      b[i][j] = bij;
      b[j][i] = -bij * dd[i] / dd[j];
    }
  }
  return b;
}

bool brute_isomorphic(const Diagram& a, const Diagram& b) {
  const int n = a.size();
  if (n != b.size()) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) ok = a.arrow(i, j) == b.arrow(p[i], p[j]);
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Diagram random_simply_laced(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution edge(density);
  std::bernoulli_distribution flip(0.5);
  Diagram d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!edge(rng)) continue;
      if (flip(rng)) {
        d.add_edge(i, j);
      } else {
        d.add_edge(j, i);
      }
    }
  }
  return d;
}

}  // namespace mutclass::testing
