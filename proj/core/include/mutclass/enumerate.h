#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mutclass/canon.h"
#include "mutclass/diagram.h"

namespace mutclass {

struct Limits {
  std::size_t max_members = 1'000'000;
  std::size_t max_steps = 10'000'000;
};

struct EnumerateOptions {
  Limits limits;
  // Threads used to expand one BFS level; 0 picks hardware concurrency.
  int workers = 1;
  // Non-zero: visit each level in a shuffled order instead of key order.
  std::uint64_t shuffle_seed = 0;
};

struct ClassStats {
  std::vector<std::size_t> frontier_sizes;
  std::size_t mutations = 0;
};

struct ClassSet {
  Diagram seed;
  // Representatives are stored in canonical vertex order.
  std::map<CanonicalKey, Diagram> members;
  bool exhausted = false;
  // Set when some member has a mutation outside the integer domain; the class is infinite.
  bool overflow = false;
  ClassStats stats;

  std::size_t size() const { return members.size(); }
  bool contains(const CanonicalKey& key) const { return members.count(key) != 0; }
};

ClassSet enumerate_class(const Diagram& seed, const EnumerateOptions& options = {});
ClassSet enumerate_class(const Diagram& seed, const Limits& limits);

enum class Equivalence { kEquivalent, kNotEquivalent, kInconclusive };

Equivalence are_mutation_equivalent(const Diagram& a, const Diagram& b,
                                    const Limits& limits = {});

}  // namespace mutclass
