#include <algorithm>

#include "mutclass/canon.h"
#include "mutclass/verify.h"

namespace mutclass {
namespace {

void path(Diagram& d, int from, int to) {
  for (int i = from; i < to; ++i) d.add_edge(i, i + 1);
}

// Both bipartite orientations of a tree, as canonical keys.
std::vector<CanonicalKey> tree_keys(const Diagram& d) {
  const int n = d.size();
  std::vector<int> color(n, -1);
  std::vector<int> stack = {0};
  color[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : d.neighbors(v)) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        stack.push_back(u);
      }
    }
  }
  std::vector<CanonicalKey> out;
  for (int side = 0; side < 2; ++side) {
    Diagram t(n);
    for (const Edge& e : d.edges()) {
      bool forward = color[e.tail] == side;
      t.add_edge(forward ? e.tail : e.head, forward ? e.head : e.tail, e.weight);
    }
    out.push_back(canonical_key(t));
  }
  return out;
}

bool is_tree(const Diagram& d) { return d.size() > 0 && d.edge_count() == d.size() - 1 && is_connected(d); }

}  // namespace

Diagram dynkin_seed(TypeKind type, int rank) {
  if (type == TypeKind::kUnknown || rank < min_rank(type)) {
    throw InvalidRank(std::string(type_code(type)) + " needs rank at least " +
                      std::to_string(min_rank(type)) + ", got " + std::to_string(rank));
  }
  const int n = vertices_for(type, rank);
  Diagram d(n);
  switch (type) {
    case TypeKind::kA:
      path(d, 0, n - 1);
      break;
    case TypeKind::kB:
      d.add_edge(0, 1, 2);
      path(d, 1, n - 1);
      break;
    case TypeKind::kD:
      path(d, 0, n - 2);
      d.add_edge(1, n - 1);
      break;
    case TypeKind::kB1:
      path(d, 0, n - 3);
      d.add_edge(n - 3, n - 2, 2);
      d.add_edge(1, n - 1);
      break;
    case TypeKind::kC1:
      d.add_edge(0, 1, 2);
      path(d, 1, n - 2);
      d.add_edge(n - 2, n - 1, 2);
      break;
    case TypeKind::kD1:
      path(d, 0, n - 3);
      d.add_edge(1, n - 2);
      d.add_edge(n - 4, n - 1);
      break;
    case TypeKind::kUnknown:
      break;
  }
  return d;
}

std::optional<MutationType> dynkin_shape(const Diagram& d) {
  if (!is_tree(d)) return std::nullopt;
  auto keys = tree_keys(d);
  for (TypeKind t : {TypeKind::kA, TypeKind::kB, TypeKind::kD, TypeKind::kB1, TypeKind::kC1,
                     TypeKind::kD1}) {
    int rank = rank_for(t, d.size());
    if (rank < min_rank(t)) continue;
    auto seed = tree_keys(dynkin_seed(t, rank));
    for (const auto& k : keys) {
      if (std::find(seed.begin(), seed.end(), k) != seed.end()) return MutationType{t, rank};
    }
  }
  return std::nullopt;
}

OracleResult classify_by_enumeration(const Diagram& d, const Limits& limits) {
  ClassSet cls = enumerate_class(d, limits);
  OracleResult out;
  for (const auto& [key, member] : cls.members) {
    if (auto t = dynkin_shape(member)) {
      out.status = OracleResult::Status::kClassified;
      out.type = *t;
      return out;
    }
  }
  out.status = cls.exhausted || cls.overflow ? OracleResult::Status::kUnknown : OracleResult::Status::kInconclusive;
  return out;
}

}  // namespace mutclass
