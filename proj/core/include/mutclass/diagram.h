#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mutclass {

using Weight = std::int64_t;

struct Edge {
  int tail = 0;
  int head = 0;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class ViolationKind {
  kSelfLoop,
  kDuplicateEdge,
  kNonPositiveWeight,
  kNonSquareCycle,
  kValidationIncomplete,
};

struct Violation {
  ViolationKind kind;
  std::string message;
  // Vertices of the offending edge or cycle, in traversal order.
  std::vector<int> witness;
};

std::string_view to_string(ViolationKind kind);

class MutationDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A finite weighted directed graph with at most one edge per vertex pair.
//
// Edges live in a dense skew matrix: arrow(i, j) = w when i->j has weight w,
// -w when j->i, 0 when i and j are not adjacent. Vertices are dense indices;
// external ids and display labels ride along.
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(int n);
  explicit Diagram(std::vector<std::string> ids);

  // Malformed edges (self-loops, repeated pairs, weight < 1) are kept out of
  // the matrix and reported by validate().
  void add_edge(int tail, int head, Weight weight = 1);
  void add_edges(std::span<const Edge> edges);

  int size() const { return n_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_.at(v); }
  std::optional<int> index_of(std::string_view id) const;

  const std::string& label(int v) const { return labels_.at(v); }
  void set_label(int v, std::string label);
  bool has_labels() const;

  Weight arrow(int i, int j) const { return m_[i * n_ + j]; }
  Weight weight(int i, int j) const {
    Weight a = arrow(i, j);
    return a < 0 ? -a : a;
  }
  bool adjacent(int i, int j) const { return arrow(i, j) != 0; }

  // One entry per edge, ordered by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;
  int edge_count() const;
  std::vector<int> neighbors(int v) const;

  int degree(int v) const;
  int in_degree(int v) const;
  int out_degree(int v) const { return degree(v) - in_degree(v); }

  const std::vector<Violation>& structural_defects() const { return defects_; }

  // Same ids, labels and edges; vertex order matters.
  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  friend Diagram mutate(const Diagram& d, int k);
  friend Diagram permute(const Diagram& d, std::span<const int> order);
  friend Diagram induced(const Diagram& d, std::span<const int> vertices);

  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::string> ids_;
  std::vector<std::string> labels_;
  std::vector<Weight> m_;
  std::vector<Violation> defects_;
};

struct UnderlyingGraph {
  std::vector<std::string> ids;
  // Undirected edges with tail < head.
  std::vector<Edge> edges;
};

UnderlyingGraph underlying(const Diagram& d);

struct ValidateOptions {
  std::size_t max_cycles = 2'000'000;
};

std::vector<Violation> validate(const Diagram& d, const ValidateOptions& options = {});

// Throws MutationDomainError when the local arithmetic has no integer solution,
// which only happens for inputs that are not diagrams.
Diagram mutate(const Diagram& d, int k);
Diagram mutate(const Diagram& d, std::string_view vertex_id);

// Vertex p of the result is vertex order[p] of d.
Diagram permute(const Diagram& d, std::span<const int> order);
Diagram induced(const Diagram& d, std::span<const int> vertices);

using VertexPair = std::pair<int, int>;

// Vertex sets (sorted) inducing a chordless cycle. With `excluded`, that edge
// is treated as absent.
std::vector<std::vector<int>> chordless_cycles(
    const Diagram& d, std::optional<VertexPair> excluded = std::nullopt);

bool is_directed_cycle(const Diagram& d, std::span<const int> cycle,
                       std::optional<VertexPair> excluded = std::nullopt);
bool is_cyclically_oriented(const Diagram& d,
                            std::optional<VertexPair> excluded = std::nullopt);
bool is_simply_laced(const Diagram& d);
bool is_connected(const Diagram& d);

std::int64_t isqrt(std::int64_t v);

}  // namespace mutclass
