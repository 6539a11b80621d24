#include "mutclass/canon.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string_view>

namespace mutclass {
namespace {

using Trace = std::vector<std::int64_t>;

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Diagram& d) : d_(d), n_(d.size()) {
    adj_.resize(n_);
    for (int v = 0; v < n_; ++v) adj_[v] = d.neighbors(v);
    twin_of_.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (twin_of_[u] == -1 && twins(u, v)) {
          twin_of_[v] = u;
          break;
        }
      }
    }
  }

  std::vector<int> run() {
    std::vector<int> colors(n_, 0);
    Trace trace;
    refine(colors, trace);
    search(colors);
    return best_order_;
  }

 private:
  // Swapping non-adjacent vertices with identical rows is an automorphism,
  // so only one of them needs to be individualized.
  bool twins(int u, int v) const {
    if (d_.adjacent(u, v)) return false;
    for (int w = 0; w < n_; ++w) {
      if (w != u && w != v && d_.arrow(u, w) != d_.arrow(v, w)) return false;
    }
    return true;
  }

  int cell_count(const std::vector<int>& colors) const {
    return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }

  // Splits cells by (own color, multiset of (neighbor color, signed weight))
  // until stable. New colors are ranks of the sorted signatures, so the
  // result and the trace do not depend on vertex numbering.
  void refine(std::vector<int>& colors, Trace& trace) const {
    int cells = cell_count(colors);
    std::vector<Trace> sig(n_);
    std::vector<int> idx(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        Trace& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        std::vector<std::pair<int, std::int64_t>> nb;
        nb.reserve(adj_[v].size());
        for (int u : adj_[v]) nb.emplace_back(colors[u], d_.arrow(v, u));
        std::sort(nb.begin(), nb.end());
        for (auto [c, a] : nb) {
          s.push_back(c);
          s.push_back(a);
        }
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int rank = 0;
      for (int p = 0; p < n_; ++p) {
        if (p > 0 && sig[idx[p]] != sig[idx[p - 1]]) {
          ++rank;
          trace.push_back(-1);
          trace.insert(trace.end(), sig[idx[p - 1]].begin(), sig[idx[p - 1]].end());
        }
        colors[idx[p]] = rank;
      }
      trace.push_back(-2);
      int next = n_ == 0 ? 0 : rank + 1;
      if (next == cells) break;
      cells = next;
    }
  }

  void search(const std::vector<int>& colors) {
    int cells = cell_count(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    struct Child {
      std::vector<int> colors;
      Trace trace;
    };
    std::vector<Child> children;
    std::vector<char> class_taken(n_, 0);
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      int root = twin_of_[v] == -1 ? v : twin_of_[v];
      if (class_taken[root]) continue;
      class_taken[root] = 1;
      Child ch;
      ch.colors = colors;
      for (int u = 0; u < n_; ++u) {
        if (colors[u] > target || (colors[u] == target && u != v)) ++ch.colors[u];
      }
      refine(ch.colors, ch.trace);
      children.push_back(std::move(ch));
    }
    const Trace* least = &children.front().trace;
    for (const Child& ch : children) {
      if (ch.trace < *least) least = &ch.trace;
    }
    Trace keep = *least;
    for (Child& ch : children) {
      if (ch.trace == keep) search(ch.colors);
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<int> order(n_);
    for (int v = 0; v < n_; ++v) order[colors[v]] = v;
    cert_.clear();
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) cert_.push_back(d_.arrow(order[p], order[q]));
    }
    if (best_order_.empty() || cert_ < best_cert_) {
      best_cert_ = cert_;
      best_order_ = std::move(order);
    }
  }

  const Diagram& d_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> twin_of_;
  Trace cert_;
  Trace best_cert_;
  std::vector<int> best_order_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& k) const noexcept {
  return std::hash<std::string_view>{}(k.bytes);
}

CanonicalKey encode_key(const Diagram& d) {
  CanonicalKey key;
  const int n = d.size();
  put_varint(key.bytes, static_cast<std::uint64_t>(n));
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) put_varint(key.bytes, zigzag(d.arrow(p, q)));
  }
  return key;
}

CanonicalForm canonical_form(const Diagram& d, int max_vertices) {
  if (d.size() > max_vertices) {
    throw SizeLimitExceeded("diagram has " + std::to_string(d.size()) +
                            " vertices, canonical labeling bound is " +
                            std::to_string(max_vertices));
  }
  CanonicalForm form;
  if (d.size() == 0) {
    form.key = encode_key(d);
    return form;
  }
  form.order = Canonicalizer(d).run();
  form.key = encode_key(permute(d, form.order));
  return form;
}

CanonicalKey canonical_key(const Diagram& d, int max_vertices) {
  return canonical_form(d, max_vertices).key;
}

Diagram canonical_diagram(const Diagram& d, const CanonicalForm& form) {
  Diagram p = permute(d, form.order);
  Diagram out(p.size());
  for (const Edge& e : p.edges()) out.add_edge(e.tail, e.head, e.weight);
  return out;
}

}  // namespace mutclass
