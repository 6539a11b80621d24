#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mutclass/diagram.h"
#include "mutclass/enumerate.h"
#include "mutclass/family.h"
#include "mutclass/recognize.h"

namespace mutclass {

// Tree of the given Dynkin type; every edge points from the lower index.
// Throws InvalidRank below min_rank.
Diagram dynkin_seed(TypeKind type, int rank);

// Type whose Dynkin shape is the underlying weighted graph of d, if any.
std::optional<MutationType> dynkin_shape(const Diagram& d);

struct OracleResult {
  enum class Status { kClassified, kUnknown, kInconclusive };
  Status status = Status::kUnknown;
  MutationType type;
};

OracleResult classify_by_enumeration(const Diagram& d, const Limits& limits = {});

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerificationFailure {
  std::string diagram;   // edge list, see edge_list()
  int vertex = -1;       // mutated vertex, -1 when not a mutation check
  std::string expected;
  std::string observed;
};

struct VerificationReport {
  std::string suite;
  std::size_t diagrams = 0;
  std::size_t mutations = 0;
  std::vector<VerificationFailure> failures;
  // "family|rule id" -> number of mutations decided by that rule.
  std::map<std::string, std::size_t> coverage;

  bool passed() const { return failures.empty(); }
  void merge(const VerificationReport& other);
  // One summary line plus one line per failure (at most `max_failures`).
  std::string to_text(std::size_t max_failures = 20) const;
};

// "0->1:2 1->2" style listing, weight suffix only when above one.
std::string edge_list(const Diagram& d);

// Classifies every mutation of every sample and checks the successor
// against the transition table.
VerificationReport check_closure(std::span<const Diagram> samples, const std::string& suite);

// check_closure over the whole mutation class of the seed.
VerificationReport check_class_closure(TypeKind type, int rank, const Limits& limits = {});

struct ShrinkResult {
  Diagram before;
  Diagram after;
  std::vector<int> sequence;  // vertices mutated, in order
  int y = 0;                  // attachment vertex inside before/after
  std::vector<std::string> problems;  // violated postconditions

  bool ok() const { return problems.empty(); }
};

// Cycle 1..n (vertices 0..n-1) oriented 2->1, ..., n->n-1, 1->n, plus the
// attachment (vertices n..) joined by y->1 and n->y; mutates at 1, ..., n-2.
ShrinkResult shrink_cycle(int n, const Diagram& attachment, int y);

struct SampleOptions {
  std::size_t per_type = 500;
  int max_vertices = 9;
  std::size_t max_attempts = 400'000;
  std::uint64_t seed = 1;
};

// Random diagrams accepted by the recognizers as `type`, built from random
// induced sub-graphs of host graphs (glued pairs for the comma families) with
// random orientations.
std::vector<Diagram> sample_recognized(TypeKind type, const SampleOptions& options);

// Every member of the seed's class classifies to the seed's type with
// exactly one family match.
VerificationReport run_forward_check(TypeKind type, int rank, const Limits& limits = {});

// Every sample is mutation equivalent to the seed of its type and rank.
VerificationReport run_reverse_check(TypeKind type, const SampleOptions& options,
                                     const Limits& limits = {});

}  // namespace mutclass
