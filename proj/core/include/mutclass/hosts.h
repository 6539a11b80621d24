#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mutclass/diagram.h"
#include "mutclass/family.h"

namespace mutclass {

class UnsupportedFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite truncation of one of the infinite undirected host graphs.
//
// Named vertices carry their role ("x", "x1", "a2", "a'1", "•", ...); a vertex
// may answer to several roles after identifications. Vertices of attached
// nabla graphs are named after their root plus a 0/1 path ("x1/01").
struct HostGraph {
  FamilyId family;
  int depth = 0;
  std::vector<std::string> names;
  // Sorted by neighbor.
  std::vector<std::vector<std::pair<int, Weight>>> adj;
  // Core vertices, each after the first adjacent to an earlier one when the
  // core is connected.
  std::vector<int> core;
  // Start of the embedding search for hosts without a core.
  int center = 0;
  std::vector<std::pair<std::string, int>> roles;  // sorted by role

  int size() const { return static_cast<int>(names.size()); }
  int edge_count() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  Weight weight(int u, int v) const;  // 0 when not adjacent
  std::optional<int> vertex(std::string_view role) const;
  bool is_core(int v) const;
  // All roles of v joined by '=', or "" for unnamed vertices.
  std::string role_of(int v) const;
  // Undirected diagram view; edges oriented from lower to higher index.
  Diagram as_diagram() const;
};

HostGraph build_nabla(int depth);
HostGraph build_host(const FamilyId& family, int depth);

// Memoized build_host; safe to call from several threads.
std::shared_ptr<const HostGraph> cached_host(const FamilyId& family, int depth);

std::string to_dot(const HostGraph& host);

}  // namespace mutclass
